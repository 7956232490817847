// Copyright 2026 The qblur Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qblur {

// Invalid arguments are reported with std::invalid_argument and out-of-box
// coordinates with std::out_of_range. The two types below cover the
// remaining failure classes.

/// Requested qubit count exceeds the configured simulator cap.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A decode kept no probability mass inside the mapping.
struct DegenerateOutputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qblur
