#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "mptutte/matroid.hpp"
#include "mptutte/subset.hpp"

namespace mptutte {

/// Activity record of one subset with respect to a pair M -> M' sharing an
/// ordered ground set (pass the same matroid twice for the plain case).
///
///   ext_active = Ext_M(A):  e outside A, smallest in a circuit of M inside A∪{e}
///   q_set      = Q_M(A):    e inside A, smallest in a circuit of M inside A
///   int_active = Int_M'(A): e inside A, smallest in a cocircuit of M' inside (E∖A)∪{e}
///   p_set      = P_M'(A):   e outside A, smallest in a cocircuit of M' inside E∖A
struct activity_profile {
  subset set;
  subset int_active;
  subset p_set;
  subset ext_active;
  subset q_set;
  int iota_prime = 0;  // |int_active|
  int cr_prime = 0;    // |p_set| = corank of the subset in M'
  int eps = 0;         // |ext_active|
  int nl = 0;          // |q_set| = nullity of the subset in M
  int rcd = 0;         // (r(M)−r(M')) − (r_M(A)−r_M'(A))
};

/// Elements that are the smallest of some circuit of m inside a ∪ {e};
/// splitting this set by membership in a gives Ext and Q.
inline subset act_elements(const matroid& m, subset a) {
  subset out;
  for (const auto& c : m.circuits()) {
    const int e = c.smallest();
    if (c.without(e).is_subset_of(a)) out = out.with(e);
  }
  return out;
}

inline activity_profile active_sets(const matroid& m, const matroid& m_prime, subset a) {
  if (m.ground() != m_prime.ground())
    throw std::invalid_argument("active_sets: matroids have different ground sets");
  m.ground().require_member(a);
  activity_profile pr;
  pr.set = a;
  for (const auto& c : m.circuits()) {
    const int e = c.smallest();
    if (a.contains(e)) {
      if (c.is_subset_of(a)) pr.q_set = pr.q_set.with(e);
    } else {
      if (c.without(e).is_subset_of(a)) pr.ext_active = pr.ext_active.with(e);
    }
  }
  const subset outside = m.ground().all().minus(a);
  for (const auto& d : m_prime.cocircuits()) {
    const int e = d.smallest();
    if (a.contains(e)) {
      if (d.without(e).is_subset_of(outside)) pr.int_active = pr.int_active.with(e);
    } else {
      if (d.is_subset_of(outside)) pr.p_set = pr.p_set.with(e);
    }
  }
  pr.iota_prime = pr.int_active.size();
  pr.cr_prime = pr.p_set.size();
  pr.eps = pr.ext_active.size();
  pr.nl = pr.q_set.size();
  pr.rcd = (m.rank() - m_prime.rank()) - (m.rank_of(a) - m_prime.rank_of(a));
  return pr;
}

/// The unique circuit of m with smallest element e contained in
/// (a ∖ Q_M(a)) ∪ {e}; e must be active, i.e. in Ext_M(a) ∪ Q_M(a).
inline subset unique_witness_circuit(const matroid& m, subset a, int e) {
  const activity_profile pr = active_sets(m, m, a);
  if (!(pr.ext_active | pr.q_set).contains(e))
    throw std::invalid_argument("element " + m.ground().label(e) + " is not active in " +
                                m.ground().render(a));
  const subset target = a.minus(pr.q_set).with(e);
  subset found;
  int count = 0;
  for (const auto& c : m.circuits()) {
    if (c.smallest() != e) continue;
    if (!c.is_subset_of(target)) continue;
    found = c;
    ++count;
  }
  if (count != 1)
    throw std::logic_error("witness circuit for " + m.ground().label(e) + " in " +
                           m.ground().render(a) + " is not unique (" +
                           std::to_string(count) + " candidates)");
  return found;
}

/// Classical Tutte–Crapo activities (iota, eps) of a basis, computed from
/// fundamental circuits and cocircuits.
inline std::pair<int, int> basis_activities(const matroid& m, subset b) {
  if (!m.is_basis(b))
    throw std::invalid_argument("basis_activities: " + m.ground().render(b) +
                                " is not a basis");
  int iota = 0, eps = 0;
  for (int e = 0; e < m.size(); ++e) {
    if (b.contains(e)) {
      if (m.fundamental_cocircuit(b, e).smallest() == e) ++iota;
    } else {
      if (m.fundamental_circuit(b, e).smallest() == e) ++eps;
    }
  }
  return {iota, eps};
}

}  // namespace mptutte
