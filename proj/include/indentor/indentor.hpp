// Copyright 2026 The Indentor Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Umbrella header for the indentor library.

#ifndef INDENTOR_INDENTOR_HPP_
#define INDENTOR_INDENTOR_HPP_

#include "indentor/block_tree.hpp"
#include "indentor/config_file.hpp"
#include "indentor/detector.hpp"
#include "indentor/lexer.hpp"
#include "indentor/render.hpp"
#include "indentor/report.hpp"
#include "indentor/style.hpp"
#include "indentor/token.hpp"

#endif  // INDENTOR_INDENTOR_HPP_
