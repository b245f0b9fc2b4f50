// Copyright 2026 The lattice-locc Authors
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

// Generalized Pauli families on C^d: size, operator-system dimension and the
// certificate the pipeline returns.

#include <iostream>

#include "locc/locc.hpp"

int main() {
  using namespace locc;
  for (std::int64_t d = 2; d <= 12; ++d) {
    const StateSet s = theorem4_family(d);
    const Verdict v = analyze(s, 7);
    std::cout << s.label() << "  m=" << s.size() << "  dim S=" << v.diagnostics.operator_system_dim
              << "  " << to_string(v.outcome) << " (" << certificate_type(v.certificate) << ")\n";
    if (d % 2 == 0) {
      const StateSet h = halfshift_variant(d);
      const Verdict hv = analyze(h, 7);
      std::cout << "  " << h.label() << "  dim S=" << hv.diagnostics.operator_system_dim
                << "  algebra=" << (hv.diagnostics.is_algebra ? "yes" : "no") << "  "
                << to_string(hv.outcome) << "\n";
    }
  }
}
