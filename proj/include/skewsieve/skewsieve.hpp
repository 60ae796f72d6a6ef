#pragma once

#include "skewsieve/abacus.hpp"
#include "skewsieve/borderstrip.hpp"
#include "skewsieve/bounds.hpp"
#include "skewsieve/character.hpp"
#include "skewsieve/cyclotomic.hpp"
#include "skewsieve/errors.hpp"
#include "skewsieve/interval.hpp"
#include "skewsieve/numeric.hpp"
#include "skewsieve/partition.hpp"
#include "skewsieve/permutation.hpp"
#include "skewsieve/polynomial.hpp"
#include "skewsieve/sieving.hpp"
#include "skewsieve/tableau_tuple.hpp"
#include "skewsieve/tableaux.hpp"
