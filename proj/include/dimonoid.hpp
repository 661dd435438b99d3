#pragma once

// Umbrella header for the whole library.

#include "dimonoid/axioms.hpp"
#include "dimonoid/catalog.hpp"
#include "dimonoid/classify.hpp"
#include "dimonoid/codec.hpp"
#include "dimonoid/enumerate.hpp"
#include "dimonoid/error.hpp"
#include "dimonoid/iso.hpp"
#include "dimonoid/tables.hpp"
