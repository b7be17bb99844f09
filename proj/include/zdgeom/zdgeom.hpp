#pragma once

#include "zdgeom/error.hpp"
#include "zdgeom/zd_scalar.hpp"
#include "zdgeom/gcircle.hpp"
#include "zdgeom/wasan.hpp"
#include "zdgeom/render.hpp"
