#pragma once

// Umbrella header.

#include "certificates.hpp"
#include "checks.hpp"
#include "constructions.hpp"
#include "errors.hpp"
#include "extremal.hpp"
#include "hypergraph.hpp"
#include "io.hpp"
#include "kset.hpp"
#include "modular.hpp"
#include "rng.hpp"
#include "search.hpp"
