#ifndef CONEWIT_CONEWIT_HPP
#define CONEWIT_CONEWIT_HPP

#include "conewit/matcore.hpp"
#include "conewit/maps.hpp"
#include "conewit/family.hpp"
#include "conewit/prodsearch.hpp"
#include "conewit/cones.hpp"
#include "conewit/edgefaces.hpp"
#include "conewit/kraw.hpp"

#endif  // CONEWIT_CONEWIT_HPP
