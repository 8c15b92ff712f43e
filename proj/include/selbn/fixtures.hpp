// Copyright 2026 The selbn Authors
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

// Bundled example graphs, byte-identical to the files under fixtures/.

#ifndef SELBN_FIXTURES_HPP_
#define SELBN_FIXTURES_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace selbn {

std::vector<std::string> fixture_names();
// Throws kInvalidArgument for an unknown name.
std::string_view fixture_text(std::string_view name);

}  // namespace selbn

#endif  // SELBN_FIXTURES_HPP_
