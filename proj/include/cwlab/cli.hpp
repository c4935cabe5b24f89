#pragma once

#include <string>

#include "cwlab/render.hpp"

namespace cwlab {

enum class Command { kTable, kRoots, kVerify, kNormalize, kDiagram, kErrata };

Command parse_command(const std::string& name);

struct CommandOutput {
    std::string text;
    int exit_code = 0;  // 0 ok; 2 when verify finds a strict-mode axiom failure
};

/// Resolves source (preset name or algebra file path), runs the command and
/// renders the document. Validation problems throw (callers map them to exit
/// code 1); verify returns exit code 2 when any strict-mode axiom fails.
CommandOutput run_command(Command cmd, const std::string& source, DocFormat format);

}  // namespace cwlab
