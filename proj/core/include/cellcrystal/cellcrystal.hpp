#pragma once

#include "cellcrystal/binf.hpp"
#include "cellcrystal/braid.hpp"
#include "cellcrystal/cartan.hpp"
#include "cellcrystal/cellular.hpp"
#include "cellcrystal/errors.hpp"
#include "cellcrystal/hlattice.hpp"
#include "cellcrystal/localized.hpp"
#include "cellcrystal/words.hpp"
