// SPDX-License-Identifier: Apache-2.0
//
// polcal: Pauli-basis calibration of quad-pol radar scattering-matrix imagery
// Copyright (C) 2026 The polcal authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace polcal
{

/// Raised for every domain and I/O failure in the library. The message is the
/// user-facing diagnostic; tests match on stable substrings of it.
class Error : public std::runtime_error
{
public:
    explicit Error(const std::string &what) : std::runtime_error(what) {}
};

} // namespace polcal
