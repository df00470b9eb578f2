#pragma once

// Everything at once.

#include "mnet/errors.hpp"
#include "mnet/cyclo.hpp"
#include "mnet/scalar_parse.hpp"
#include "mnet/linalg.hpp"
#include "mnet/arrangement.hpp"
#include "mnet/arrangement_io.hpp"
#include "mnet/cartan.hpp"
#include "mnet/multinet.hpp"
#include "mnet/osalgebra.hpp"
#include "mnet/pencil.hpp"
#include "mnet/criteria.hpp"
#include "mnet/corpus.hpp"
#include "mnet/report.hpp"
#include "mnet/render.hpp"
