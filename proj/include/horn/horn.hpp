// horn.hpp -- umbrella header for the whole library

#ifndef HORN_HORN_HPP_
#define HORN_HORN_HPP_

#include "horn/atom.hpp"
#include "horn/errors.hpp"
#include "horn/rule.hpp"
#include "horn/theory.hpp"
#include "horn/algebra.hpp"
#include "horn/semantics.hpp"
#include "horn/decomposition.hpp"
#include "horn/textio.hpp"
#include "horn/oracle.hpp"

#endif  // HORN_HORN_HPP_
