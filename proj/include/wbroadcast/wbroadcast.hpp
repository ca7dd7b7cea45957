#pragma once

#include "wbroadcast/analysis.hpp"
#include "wbroadcast/cloner.hpp"
#include "wbroadcast/eig.hpp"
#include "wbroadcast/matrix.hpp"
#include "wbroadcast/measures.hpp"
#include "wbroadcast/partial.hpp"
#include "wbroadcast/register.hpp"
#include "wbroadcast/separability.hpp"
#include "wbroadcast/states.hpp"
