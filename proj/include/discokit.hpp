#pragma once

#include "discokit/core.hpp"
#include "discokit/critical_locus.hpp"
#include "discokit/exact.hpp"
#include "discokit/faces.hpp"
#include "discokit/geometry.hpp"
#include "discokit/implicitize.hpp"
#include "discokit/io.hpp"
#include "discokit/membership.hpp"
#include "discokit/polynomial.hpp"
#include "discokit/verify.hpp"
#include "discokit/worked_examples.hpp"
