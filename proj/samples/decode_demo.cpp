// Copyright 2026 The folded-rs Authors.
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

// Plants a message, corrupts the codeword, and list decodes it.

#include <iostream>
#include <random>

#include "frs/frs.hpp"

int main() {
  const frs::FRSParams params(13, 3, 2, /*s=*/2, /*r=*/3);
  const auto guarantee = frs::decoding_guarantee(params);
  std::cout << "n=" << params.n() << " N=" << params.N() << " rate=" << params.rate() << " D=" << guarantee.D
            << " t=" << guarantee.t << "\n";

  std::mt19937_64 rng(2026);
  const frs::Message msg = frs::make_message(params, {5, 0, 11});
  const frs::Codeword cw = frs::encode(params, msg);
  const auto e = static_cast<std::uint32_t>(guarantee.max_errors);
  const frs::ReceivedWord rx = frs::apply_channel(params, cw, {frs::ChannelKind::uniform, e, {}}, rng);
  std::cout << "sent:\n" << frs::format_word(cw) << "received (" << e << " symbol errors):\n" << frs::format_word(rx);

  const auto result = frs::list_decode(params, rx);
  std::cout << "list of " << result.messages.size() << ":\n";
  for (const auto& g : result.messages) std::cout << "  " << frs::format_message(params, g);
  return 0;
}
