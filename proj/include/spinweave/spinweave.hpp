#pragma once

#include "spinweave/error.hpp"
#include "spinweave/linalg.hpp"
#include "spinweave/network.hpp"
#include "spinweave/dynamics.hpp"
#include "spinweave/sweep.hpp"
#include "spinweave/protocols.hpp"
#include "spinweave/gates.hpp"
#include "spinweave/io.hpp"
