#pragma once

#include "fairchk/bitset_backend.hpp"
#include "fairchk/errors.hpp"
#include "fairchk/generate.hpp"
#include "fairchk/mec.hpp"
#include "fairchk/model.hpp"
#include "fairchk/obdd_backend.hpp"
#include "fairchk/oracle.hpp"
#include "fairchk/reach.hpp"
#include "fairchk/run.hpp"
#include "fairchk/scc.hpp"
#include "fairchk/streett_graph.hpp"
#include "fairchk/streett_mdp.hpp"
#include "fairchk/streett_pairs.hpp"
#include "fairchk/symbolic.hpp"
#include "fairchk/symbolic_pairs.hpp"
