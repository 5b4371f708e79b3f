#pragma once

// Umbrella header for the paraparticle algebra toolkit.

#include "para/element.hpp"
#include "para/fock.hpp"
#include "para/grading.hpp"
#include "para/hopf.hpp"
#include "para/lie.hpp"
#include "para/parastat.hpp"
#include "para/relations.hpp"
#include "para/report.hpp"
#include "para/rewrite.hpp"
#include "para/scalar.hpp"
#include "para/symbol.hpp"
#include "para/tensor.hpp"
#include "para/text.hpp"
#include "para/word.hpp"
