#pragma once

#include <string>
#include <vector>

#include "seqeca/dynamics.hpp"

namespace seqeca {

enum class TraceGranularity { kSteps, kSubsteps };

// Trajectory rows for rendering: row 0 is the input; rows continue until the
// first repeated step configuration, inclusive, so the cycle is visibly
// confirmed.  Step-boundary rows are marked.
struct SpaceTimeDiagram {
  struct Row {
    Configuration config;
    bool step_boundary;
    int step_index;     // completed steps when this row was produced
    int substep_index;  // substeps into the current step (0 on boundaries)
  };
  std::vector<Row> rows;
  OrbitRecord record;
};

inline SpaceTimeDiagram trace_orbit(const DynamicalSystem& sys, const Configuration& start,
                                    TraceGranularity granularity, long max_steps = -1) {
  SpaceTimeDiagram diagram;
  diagram.record = orbit(sys, start, max_steps);
  const int last_step = diagram.record.transient + diagram.record.cycle;

  Configuration x = start;
  diagram.rows.push_back({x, true, 0, 0});
  for (int t = 1; t <= last_step; ++t) {
    if (granularity == TraceGranularity::kSubsteps) {
      std::uint32_t bits = x.bits();
      const auto& blocks = sys.mode.blocks();
      for (std::size_t k = 0; k + 1 < blocks.size(); ++k) {
        bits = substep_bits(sys.rule, bits, sys.n, blocks[k]);
        diagram.rows.push_back({Configuration(sys.n, bits), false, t - 1, static_cast<int>(k) + 1});
      }
    }
    x = step(sys, x);
    diagram.rows.push_back({x, true, t, 0});
  }
  return diagram;
}

// One character per cell; step rows carry a '|' marker so substep rows are
// visually distinct.
inline std::string render_text(const SpaceTimeDiagram& diagram, char zero = '0', char one = '1') {
  std::string out;
  for (const auto& row : diagram.rows) {
    std::string cells = row.config.to_string();
    if (zero != '0' || one != '1')
      for (char& c : cells) c = c == '0' ? zero : one;
    out += cells;
    if (row.step_boundary) {
      out += " |";
      out += std::to_string(row.step_index);
    }
    out += '\n';
  }
  return out;
}

}  // namespace seqeca
