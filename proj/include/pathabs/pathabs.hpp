// Copyright (c) pathabs contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pathabs/abstraction.hpp"
#include "pathabs/checker.hpp"
#include "pathabs/dtmc.hpp"
#include "pathabs/error.hpp"
#include "pathabs/model_file.hpp"
#include "pathabs/rational.hpp"
#include "pathabs/scc.hpp"
#include "pathabs/state_set.hpp"
#include "pathabs/words.hpp"
