// Copyright 2026 The defectkit Authors
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

#ifndef DEFECTKIT_TEXTFORM_HPP
#define DEFECTKIT_TEXTFORM_HPP

#include <string>

#include "defectkit/anyon.hpp"
#include "defectkit/lattice.hpp"
#include "defectkit/scheme.hpp"

namespace dk {

// Declarative text format, shared across the toolkit.  Every file starts
// with the versioned header "defectkit-format 1" and a "kind" line; '#'
// starts a comment.  Parse errors carry 1-based line numbers.

/// Returns the "kind" of a document (model | lattice | scheme).
std::string peek_kind(const std::string& text);

ModelPtr parse_model_text(const std::string& text);
LatticeSpec parse_lattice_text(const std::string& text);
Scheme parse_scheme_text(const std::string& text);

std::string model_to_text(const ExcitationModel& model);
std::string lattice_to_text(const LatticeSpec& spec);

}  // namespace dk

#endif  // DEFECTKIT_TEXTFORM_HPP
