#pragma once

#include "cellforge/base.hpp"
#include "cellforge/builders.hpp"
#include "cellforge/census.hpp"
#include "cellforge/classify.hpp"
#include "cellforge/complex.hpp"
#include "cellforge/corona.hpp"
#include "cellforge/flags.hpp"
#include "cellforge/glue.hpp"
#include "cellforge/io.hpp"
#include "cellforge/quotient.hpp"
#include "cellforge/subdivide.hpp"
#include "cellforge/verify.hpp"
