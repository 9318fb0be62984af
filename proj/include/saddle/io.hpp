#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "saddle/experiments.hpp"
#include "saddle/optimizers.hpp"
#include "saddle/problems.hpp"
#include "saddle/rates.hpp"
#include "saddle/schedules.hpp"
#include "saddle/spectral.hpp"

namespace saddle::io {

/// Keys keep insertion order so output is byte-stable.
using Json = nlohmann::ordered_json;

/// 12 significant digits, as used in every CSV file.
std::string csv_number(double v);
/// JSON text with two-space indentation and a trailing newline.
std::string dump(const Json& j);

Json problem_to_json(const QuadraticProblem& problem);
/// Rebuilds the basis from basis_seed when present. Throws DomainError on
/// malformed input.
QuadraticProblem problem_from_json(const Json& j);

Json schedule_to_json(const MomentumSchedule& schedule);
MomentumSchedule schedule_from_json(const Json& j);

/// Parses nesterov | attouch:ETA | constant:B,G | polyak:M,L | toy[:A,D,G].
/// A bare "toy" takes (alpha, delta, gamma_hat) from the supplied defaults.
/// Throws std::invalid_argument on malformed text.
MomentumSchedule parse_schedule(const std::string& text, double alpha = 0.0, double delta = 0.0,
                                double gamma_hat = 0.0);

Json eigenpair_to_json(const EigenPair& pair);
Json spectrum_to_json(const SpectrumClassification& spectrum);

Json rate_report(const RateSequence& seq, const RateLimit& limit, long predicted_escape_iters);

Json tk_report_to_json(const TkReport& report);

/// Header iter,x1..xn,f,grad_norm. With a projector the coordinate columns
/// are replaced by proj_1..proj_r = components of P x. Only steps divisible
/// by thin are written (the last recorded step is always written).
void write_trace_csv(std::ostream& out, const IterationTrace& trace, long thin = 1,
                     const Projector* projector = nullptr);

/// Two blocks in one table: method,iter,x1,x2.
void write_toy_figure_csv(std::ostream& out, const ToyFigure& fig);

/// iter,gd,heavy_ball,accelerated,predictor.
void write_negspace_csv(std::ostream& out, const NegspaceResult& result, long thin = 1);

/// One row per trial followed by summary rows.
void write_table_csv(std::ostream& out, const TableResult& table);
Json table_to_json(const TableSpec& spec, const TableResult& table);

}  // namespace saddle::io
