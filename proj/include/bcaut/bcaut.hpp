#ifndef BCAUT_BCAUT_HPP
#define BCAUT_BCAUT_HPP

#include "automata.hpp"
#include "bits.hpp"
#include "bounds.hpp"
#include "bundle.hpp"
#include "circuit.hpp"
#include "cnf.hpp"
#include "encoding.hpp"
#include "error.hpp"
#include "experiment.hpp"
#include "families.hpp"
#include "formats.hpp"
#include "gadgets.hpp"
#include "language_ops.hpp"
#include "nfa_circuit.hpp"
#include "oracle.hpp"
#include "random.hpp"
#include "synthesis.hpp"
#include "tadpole.hpp"

#endif
