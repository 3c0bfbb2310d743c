#pragma once

#include <string>

#include <fmt/format.h>

namespace zipfben {

// Six decimals, with negative zero printed as 0.000000 so output is stable.
inline std::string fixed6(double value) {
  auto text = fmt::format("{:.6f}", value);
  if (text == "-0.000000") {
    text.erase(0, 1);
  }
  return text;
}

} // namespace zipfben
