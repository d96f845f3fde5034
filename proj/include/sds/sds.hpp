#pragma once

// Umbrella header for the whole library.

#include "sds/natural.hpp"
#include "sds/zmod.hpp"
#include "sds/difference.hpp"
#include "sds/format.hpp"
#include "sds/canonical.hpp"
#include "sds/sequences.hpp"
#include "sds/search.hpp"
#include "sds/corpus.hpp"
