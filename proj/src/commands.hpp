#pragma once

// Command layer shared by the C API and (through it) the CLI. Every command
// returns the process exit code and the full report text: 0 = pass,
// 1 = axiom/check failure (report carries the witness), 2 = input error.
// Reports are deterministic byte streams for identical inputs; wall-clock
// timing never appears in them.

#include <string>

#include "bundle.hpp"

namespace xalg {

struct CommandResult {
    int rc = 0;
    std::string out;
};

// kind: group | hom | action | xmod | ggpd | catxmod | xsq
CommandResult cmd_check(const Bundle* bundle, const std::string& kind, const std::string& name);

// functor: phi | psi | eta | psi_sq | pair | discrete; output is a bundle.
CommandResult cmd_convert(const Bundle* bundle, const std::string& functor,
                          const std::string& name);

// kind: xmod | catxmod | xsq
CommandResult cmd_roundtrip(const Bundle* bundle, const std::string& kind,
                            const std::string& name);

// kind: actions | xmods | ggpds; a and b are catalog group names.
CommandResult cmd_enumerate(const std::string& kind, const std::string& a, const std::string& b,
                            bool classify);

CommandResult cmd_catalog_list();
CommandResult cmd_catalog_emit(const std::string& name);

}  // namespace xalg
