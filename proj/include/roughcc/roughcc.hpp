#pragma once

#include <roughcc/core.hpp>
#include <roughcc/tensor.hpp>
#include <roughcc/spectral.hpp>
#include <roughcc/group.hpp>
#include <roughcc/paths.hpp>
#include <roughcc/parallel.hpp>
#include <roughcc/rough.hpp>
#include <roughcc/flows.hpp>
#include <roughcc/io.hpp>
