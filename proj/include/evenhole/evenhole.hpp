#pragma once

// Core types
#include "bitset.hpp"
#include "graph.hpp"
#include "hole.hpp"
#include "path.hpp"

// Shortcut taxonomy and ground truth
#include "oracle.hpp"
#include "shortcuts.hpp"

// Searches and the driver
#include "octet_search.hpp"
#include "pipeline.hpp"
#include "quad_search.hpp"

// Corpus and misc
#include "generators.hpp"
#include "parallel.hpp"
#include "version.hpp"
