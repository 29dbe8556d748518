#pragma once

#include "errors.hpp"
#include "group.hpp"
#include "subgroups.hpp"
#include "fiber.hpp"
#include "subcharacter.hpp"
#include "ring.hpp"
#include "ghost.hpp"
#include "species.hpp"
#include "catalog.hpp"
#include "suites.hpp"
#include "io.hpp"
#include "cli.hpp"
