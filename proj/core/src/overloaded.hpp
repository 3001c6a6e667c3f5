#pragma once

namespace fock::detail {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace fock::detail
