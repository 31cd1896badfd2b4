// Copyright 2026 The biprym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "biprym/binform.hpp"
#include "biprym/bipoly.hpp"
#include "biprym/curve.hpp"
#include "biprym/elliptic.hpp"
#include "biprym/errors.hpp"
#include "biprym/family.hpp"
#include "biprym/hodge_lattice.hpp"
#include "biprym/lattice.hpp"
#include "biprym/matrix.hpp"
#include "biprym/poly.hpp"
#include "biprym/ratfn.hpp"
#include "biprym/rational.hpp"
#include "biprym/resultant.hpp"
#include "biprym/roots.hpp"
#include "biprym/torelli.hpp"
