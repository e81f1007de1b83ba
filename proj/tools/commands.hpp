#pragma once

#include <iosfwd>

#include "config.hpp"

namespace htldp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitDisagreement = 3;

int cmd_rate(const json& cfg, std::ostream& out);
int cmd_solve_c(const json& cfg, std::ostream& out);
int cmd_bbp(const json& cfg, std::ostream& out);
int cmd_tail(const json& cfg, std::ostream& out);
int cmd_isotropy(const json& cfg, std::ostream& out);
int cmd_check(const json& cfg, std::ostream& out);

}  // namespace htldp::cli
