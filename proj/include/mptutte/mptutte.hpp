#pragma once

#include "mptutte/activity.hpp"
#include "mptutte/io.hpp"
#include "mptutte/matroid.hpp"
#include "mptutte/perspective.hpp"
#include "mptutte/poly.hpp"
#include "mptutte/subset.hpp"
#include "mptutte/tables.hpp"
#include "mptutte/tutte.hpp"
#include "mptutte/verify.hpp"
