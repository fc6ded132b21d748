#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ersurf/classify.hpp"
#include "ersurf/errors.hpp"

namespace ersurf::cli {

/// A surface as written: dec(<divisor>), ind0 or indm1(<point>).
struct SurfaceSpec {
    SurfaceFamily family = SurfaceFamily::Indec0;
    std::optional<Divisor> e_divisor;   // dec only
    std::optional<GroupElement> p0;     // indm1 only

    SurfaceModel model(const CurveGroup& group) const;
    friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;
};

/// m X0 + (<divisor>) f as written.
struct SystemSpec {
    int m = 1;
    Divisor b;
    SurfaceDivisorClass cls() const { return {m, class_of(b)}; }
    friend bool operator==(const SystemSpec&, const SystemSpec&) = default;
};

struct Analyze { SurfaceSpec surface; SystemSpec system; friend bool operator==(const Analyze&, const Analyze&) = default; };
struct Classify { SurfaceSpec surface; SystemSpec system; friend bool operator==(const Classify&, const Classify&) = default; };
struct Elm { SurfaceSpec surface; PointSpec x; friend bool operator==(const Elm&, const Elm&) = default; };
struct Walk { SurfaceSpec surface; std::vector<StepTemplate> steps; friend bool operator==(const Walk&, const Walk&) = default; };
struct Table { int n = 3; friend bool operator==(const Table&, const Table&) = default; };
struct Nagata { NagataTarget target; bool verify = false; friend bool operator==(const Nagata&, const Nagata&) = default; };
struct MinCurves { SurfaceSpec surface; PointSpec pair; friend bool operator==(const MinCurves&, const MinCurves&) = default; };
struct Ram { SurfaceSpec surface; GroupElement t; friend bool operator==(const Ram&, const Ram&) = default; };

using Body = std::variant<Analyze, Classify, Elm, Walk, Table, Nagata, MinCurves, Ram>;

struct Command {
    Body body;
    CurveGroup group = CurveGroup::torus(12, 12);
    bool json = false;
    std::uint64_t seed = 0;

    friend bool operator==(const Command&, const Command&) = default;
};

/// ParseError or SemanticError with a 1-based source position.
class ParseFailure : public Error {
public:
    ParseFailure(ErrorCode code, int line, int column, const std::string& message)
        : Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// Double quotes count as whitespace, so shell-quoted systems parse as-is.
Command parse(std::string_view input);

/// Canonical text: merged divisor terms sorted by point, identity as "O",
/// empty divisor as "0*O", flags only when they differ from the defaults.
std::string format(const Command& c);
std::string format_divisor(const Divisor& d);

/// Executes a parsed command. Returns 0, or 1 on an engine error.
int run(const Command& c, std::ostream& out, std::ostream& err);

/// parse + run. Parse and semantic errors return 2. In JSON mode every
/// error object goes to `out` and the diagnostic line to `err`.
int run_text(std::string_view input, std::ostream& out, std::ostream& err);

}  // namespace ersurf::cli
