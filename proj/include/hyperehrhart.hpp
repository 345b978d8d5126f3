#ifndef HYPEREHRHART_HPP
#define HYPEREHRHART_HPP

#include "hyperehrhart/arith.hpp"
#include "hyperehrhart/symgroup.hpp"
#include "hyperehrhart/class_function.hpp"
#include "hyperehrhart/parallel.hpp"
#include "hyperehrhart/hstar.hpp"
#include "hyperehrhart/oracle.hpp"
#include "hyperehrhart/dosp.hpp"
#include "hyperehrhart/characters.hpp"
#include "hyperehrhart/triangulation.hpp"

#endif  // HYPEREHRHART_HPP
