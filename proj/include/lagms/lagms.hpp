#ifndef LAGMS_LAGMS_HPP
#define LAGMS_LAGMS_HPP

#include "lagms/rational.hpp"
#include "lagms/polynomial.hpp"
#include "lagms/realroot.hpp"
#include "lagms/laguerre.hpp"
#include "lagms/bivariate.hpp"
#include "lagms/diffop.hpp"
#include "lagms/sequences.hpp"
#include "lagms/rootfind.hpp"
#include "lagms/falsify.hpp"
#include "lagms/parallel.hpp"
#include "lagms/conjecture.hpp"
#include "lagms/io.hpp"
#include "lagms/verify.hpp"

#endif // LAGMS_LAGMS_HPP
