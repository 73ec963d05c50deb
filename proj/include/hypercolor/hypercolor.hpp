#pragma once

#include "hypercolor/brooks.hpp"
#include "hypercolor/core.hpp"
#include "hypercolor/dynamic_coloring.hpp"
#include "hypercolor/errors.hpp"
#include "hypercolor/image_builder.hpp"
#include "hypercolor/instance_gen.hpp"
#include "hypercolor/io.hpp"
#include "hypercolor/theorem_one.hpp"
#include "hypercolor/verify.hpp"
