#pragma once

#include "morse/bracket.hpp"
#include "morse/catalog.hpp"
#include "morse/dsl.hpp"
#include "morse/event.hpp"
#include "morse/invariants.hpp"
#include "morse/laurent.hpp"
#include "morse/moves.hpp"
#include "morse/rational.hpp"
#include "morse/render.hpp"
#include "morse/search.hpp"
#include "morse/word.hpp"
