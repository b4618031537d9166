#pragma once

#include "supercrystal/alphabet.hpp"
#include "supercrystal/tableau.hpp"
#include "supercrystal/word_crystal.hpp"
#include "supercrystal/matrix.hpp"
#include "supercrystal/correspondence.hpp"
#include "supercrystal/array.hpp"
#include "supercrystal/spinor.hpp"
#include "supercrystal/fixtures.hpp"
#include "supercrystal/io.hpp"
#include "supercrystal/registry.hpp"
#include "supercrystal/verify.hpp"
