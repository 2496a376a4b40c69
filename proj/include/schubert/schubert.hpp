#pragma once

#include "board.hpp"
#include "errors.hpp"
#include "game.hpp"
#include "moves.hpp"
#include "oracle.hpp"
#include "puzzles.hpp"
#include "render.hpp"
#include "schur.hpp"
#include "specialization.hpp"
