#ifndef DTG_DTG_HPP
#define DTG_DTG_HPP

#include "dtg/coloring.hpp"
#include "dtg/error.hpp"
#include "dtg/oddcycle.hpp"
#include "dtg/typecore.hpp"
#include "dtg/typegraph.hpp"
#include "dtg/vertex.hpp"
#include "dtg/vertexspace.hpp"

#endif  // DTG_DTG_HPP
