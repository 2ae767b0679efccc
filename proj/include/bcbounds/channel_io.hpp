#pragma once

#include <string>

#include "bcbounds/prob.hpp"

namespace bcb {

struct NamedChannel {
  std::string name;
  BroadcastChannel channel;
};

// Parses the plain-text channel document:
//
//   name my-channel        (optional)
//   input_size 2
//   y1
//   0.5 0.5
//   0 1
//   y2
//   1 0
//   0.5 0.5
//
// `y1`/`y2` are followed by input_size rows of probabilities. Blank lines and
// lines starting with '#' are skipped. Errors carry the line number and the
// offending field/row.
NamedChannel parse_channel_text(const std::string& text);
NamedChannel parse_channel_file(const std::string& path);

// Accepts either a file path or the shorthand "bssc:P".
NamedChannel resolve_channel_spec(const std::string& spec);

std::string format_channel(const NamedChannel& nc);

}  // namespace bcb
