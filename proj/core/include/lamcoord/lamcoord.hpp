#pragma once

#include "lamcoord/dynnikov.hpp"
#include "lamcoord/error.hpp"
#include "lamcoord/lamination.hpp"
#include "lamcoord/oracle.hpp"
#include "lamcoord/render.hpp"
#include "lamcoord/surface.hpp"
#include "lamcoord/triangle.hpp"
