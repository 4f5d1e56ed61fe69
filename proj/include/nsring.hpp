#ifndef NSRING_HPP
#define NSRING_HPP

#include "nsring/error.hpp"
#include "nsring/semigroup.hpp"
#include "nsring/ideal.hpp"
#include "nsring/ringcalc.hpp"
#include "nsring/classify.hpp"
#include "nsring/herzog.hpp"

#endif
