#ifndef KCME_KCME_HPP
#define KCME_KCME_HPP

#include "bench.hpp"
#include "bit_vector.hpp"
#include "decision.hpp"
#include "errors.hpp"
#include "fpt_solver.hpp"
#include "generator.hpp"
#include "io.hpp"
#include "mask_graph.hpp"
#include "model.hpp"
#include "nucs.hpp"
#include "oracle.hpp"
#include "stats.hpp"

#endif  // KCME_KCME_HPP
