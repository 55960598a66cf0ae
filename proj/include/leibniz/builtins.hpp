#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Named example algebras: "l5", "ex3dim", "ex5dim", "heisenberg", "b2".
///
/// All constants are integers, so every builtin can be instantiated over Q or any
/// GF(p). Constants that vanish under reduction are reported in `vanished`.
FieldChange builtin(std::string_view name, FieldSpec field = FieldSpec::rationals());

const std::vector<std::string>& builtin_names();
bool is_builtin(std::string_view name);

}  // namespace leibniz
