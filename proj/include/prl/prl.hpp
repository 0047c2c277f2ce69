#pragma once

#include "prl/bit_matrix.hpp"
#include "prl/correspondence.hpp"
#include "prl/graph.hpp"
#include "prl/pauli.hpp"
#include "prl/projective_line.hpp"
#include "prl/quadrangle.hpp"
#include "prl/reference.hpp"
#include "prl/ring.hpp"
#include "prl/serialize.hpp"
#include "prl/sign_matrix.hpp"
