#pragma once

#include "cyclesys/bijection.hpp"
#include "cyclesys/constructions.hpp"
#include "cyclesys/coparking.hpp"
#include "cyclesys/cycle_system.hpp"
#include "cyclesys/element_subset.hpp"
#include "cyclesys/errors.hpp"
#include "cyclesys/firing.hpp"
#include "cyclesys/gf2.hpp"
#include "cyclesys/io.hpp"
#include "cyclesys/matroid.hpp"
#include "cyclesys/multigraph.hpp"
#include "cyclesys/search.hpp"
#include "cyclesys/tutte.hpp"
