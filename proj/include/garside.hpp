#pragma once

#include "garside/types.hpp"
#include "garside/ring.hpp"
#include "garside/coxeter.hpp"
#include "garside/garside.hpp"
#include "garside/parabolic.hpp"
#include "garside/absorbable.hpp"
#include "garside/growth.hpp"
#include "garside/io.hpp"
#include "garside/cal_graph.hpp"
#include "garside/freeprod.hpp"
