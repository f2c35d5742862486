/*
   Copyright 2026 The mosls Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "construct.hpp"
#include "designs.hpp"
#include "error.hpp"
#include "gf.hpp"
#include "graph.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "spectra.hpp"
#include "switching.hpp"
#include "table.hpp"
#include "text_format.hpp"
