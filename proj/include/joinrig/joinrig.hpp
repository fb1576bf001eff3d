#ifndef JOINRIG_JOINRIG_HPP
#define JOINRIG_JOINRIG_HPP

#include "joinrig/connectivity.hpp"
#include "joinrig/errors.hpp"
#include "joinrig/families.hpp"
#include "joinrig/field.hpp"
#include "joinrig/graph.hpp"
#include "joinrig/io.hpp"
#include "joinrig/matrix.hpp"
#include "joinrig/quadric.hpp"
#include "joinrig/recognition.hpp"
#include "joinrig/rigidity.hpp"

#endif
