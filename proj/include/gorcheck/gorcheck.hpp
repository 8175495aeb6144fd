// Umbrella header.
#pragma once

#include "gorcheck/crosscheck.hpp"
#include "gorcheck/elis.hpp"
#include "gorcheck/field.hpp"
#include "gorcheck/generate.hpp"
#include "gorcheck/oracle.hpp"
#include "gorcheck/paths.hpp"
#include "gorcheck/quiver.hpp"
#include "gorcheck/strings.hpp"
