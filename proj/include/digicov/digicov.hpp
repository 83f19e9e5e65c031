// Copyright 2026 The digicov Authors
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

#ifndef DIGICOV_DIGICOV_HPP
#define DIGICOV_DIGICOV_HPP

#include "digicov/catalog.hpp"
#include "digicov/certify.hpp"
#include "digicov/covering.hpp"
#include "digicov/error.hpp"
#include "digicov/lattice.hpp"
#include "digicov/morphism.hpp"
#include "digicov/oracle.hpp"
#include "digicov/witness.hpp"

#endif  // DIGICOV_DIGICOV_HPP
