#pragma once

#include "swlab/algebra_analysis.hpp"
#include "swlab/canonical_map.hpp"
#include "swlab/error.hpp"
#include "swlab/gl_group.hpp"
#include "swlab/integer_linalg.hpp"
#include "swlab/linalg.hpp"
#include "swlab/matrix.hpp"
#include "swlab/polyrep.hpp"
#include "swlab/ring.hpp"
#include "swlab/schur_algebra.hpp"
#include "swlab/serialization.hpp"
#include "swlab/symmetric_tensors.hpp"
#include "swlab/tensor_space.hpp"
