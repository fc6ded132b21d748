#include "ersurf/cli.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "ersurf/json.hpp"

namespace ersurf::cli {
namespace {

struct Token {
    enum class Kind { Int, Ident, Flag, Punct, End };
    Kind kind;
    std::string text;
    std::int64_t value = 0;
    int line = 1;
    int column = 1;
};

std::string describe(const Token& t) {
    switch (t.kind) {
    case Token::Kind::End: return "end of input";
    case Token::Kind::Flag: return "'--" + t.text + "'";
    default: return "'" + t.text + "'";
    }
}

[[noreturn]] void fail(const Token& at, const std::string& msg) {
    throw ParseFailure(ErrorCode::ParseError, at.line, at.column, msg);
}

[[noreturn]] void semantic(const Token& at, const std::string& msg) {
    throw ParseFailure(ErrorCode::SemanticError, at.line, at.column, msg);
}

std::vector<Token> lex(std::string_view in) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (in[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < in.size()) {
        const char c = in[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == '"') {
            advance(1);
            continue;
        }
        Token t{Token::Kind::Punct, std::string(1, c), 0, line, col};
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < in.size() && std::isdigit(static_cast<unsigned char>(in[j]))) ++j;
            t.kind = Token::Kind::Int;
            t.text = std::string(in.substr(i, j - i));
            if (t.text.size() > 12) fail(t, "integer literal too large");
            t.value = std::stoll(t.text);
            advance(j - i);
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < in.size() && (std::isalnum(static_cast<unsigned char>(in[j])) || in[j] == '_')) ++j;
            t.kind = Token::Kind::Ident;
            t.text = std::string(in.substr(i, j - i));
            advance(j - i);
        } else if (c == '-' && i + 2 < in.size() + 0 && in[i + 1] == '-' &&
                   std::isalpha(static_cast<unsigned char>(in[i + 2]))) {
            std::size_t j = i + 2;
            while (j < in.size() && (std::isalnum(static_cast<unsigned char>(in[j])) || in[j] == '-' || in[j] == '_'))
                ++j;
            t.kind = Token::Kind::Flag;
            t.text = std::string(in.substr(i + 2, j - i - 2));
            advance(j - i);
        } else if (std::string_view("()+-*,@{}").find(c) != std::string_view::npos) {
            advance(1);
        } else {
            fail(t, std::string("unexpected character '") + c + "'");
        }
        out.push_back(std::move(t));
    }
    out.push_back({Token::Kind::End, "", 0, line, col});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Command parse() {
        Flags c;
        extract_flags(c);
        return Command{body(c), c.group, c.json, c.seed};
    }

private:
    struct Flags {
        CurveGroup group = CurveGroup::torus(12, 12);
        bool json = false;
        std::uint64_t seed = 0;
    };

    Body body(const Flags& c) {
        Body out = Table{};
        const Token& word = peek();
        if (word.kind != Token::Kind::Ident)
            fail(word, "expected one of {analyze, classify, elm, walk, table, nagata, mincurves, ram}, found " +
                           describe(word));
        next();
        group_ = c.group;
        if (word.text == "analyze") {
            Analyze a{surface(), system()};
            out = std::move(a);
        } else if (word.text == "classify") {
            SurfaceSpec s = surface();
            const Token& at = peek();
            SystemSpec sys = system();
            if (sys.m != 1) semantic(at, "classify takes a unisecant system 1X0+(b)f");
            out = Classify{std::move(s), std::move(sys)};
        } else if (word.text == "elm") {
            SurfaceSpec s = surface();
            const Token& at = peek();
            PointSpec x = pointspec();
            check_family(s, x, at);
            out = Elm{std::move(s), x};
        } else if (word.text == "walk") {
            Walk w{surface(), {}};
            while (peek().kind != Token::Kind::End) w.steps.push_back(step());
            out = std::move(w);
        } else if (word.text == "table") {
            const Token& at = expect_int();
            if (at.value < 3) semantic(at, "tables start at N = 3");
            out = Table{static_cast<int>(at.value)};
        } else if (word.text == "nagata") {
            out = Nagata{target(), verify_};
            verify_used_ = true;
        } else if (word.text == "mincurves") {
            const Token& st = peek();
            SurfaceSpec s = surface();
            if (s.family != SurfaceFamily::IndecMinus1) semantic(st, "mincurves needs an indm1(...) surface");
            const Token& at = peek();
            PointSpec x = pointspec();
            if (x.kind() != PointSpec::Kind::Pair) semantic(at, "mincurves needs a pair{q,r} point");
            out = MinCurves{std::move(s), x};
        } else if (word.text == "ram") {
            const Token& st = peek();
            SurfaceSpec s = surface();
            if (s.family != SurfaceFamily::IndecMinus1) semantic(st, "ram needs an indm1(...) surface");
            out = Ram{std::move(s), point()};
        } else {
            fail(word, "expected one of {analyze, classify, elm, walk, table, nagata, mincurves, ram}, found " +
                           describe(word));
        }
        if (peek().kind != Token::Kind::End) fail(peek(), "expected end of input, found " + describe(peek()));
        if (verify_ && !verify_used_) semantic(*verify_tok_, "--verify only applies to nagata");
        return out;
    }

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    bool at_punct(char c) const { return peek().kind == Token::Kind::Punct && peek().text[0] == c; }
    bool at_ident(std::string_view s) const { return peek().kind == Token::Kind::Ident && peek().text == s; }

    const Token& expect_punct(char c, const std::string& expected) {
        if (!at_punct(c)) fail(peek(), "expected one of {" + expected + "}, found " + describe(peek()));
        return next();
    }
    const Token& expect_ident(std::string_view s) {
        if (!at_ident(s)) fail(peek(), "expected one of {" + std::string(s) + "}, found " + describe(peek()));
        return next();
    }
    const Token& expect_int() {
        if (peek().kind != Token::Kind::Int) fail(peek(), "expected one of {INT}, found " + describe(peek()));
        return next();
    }
    std::int64_t signed_int() {
        bool neg = false;
        if (at_punct('-')) {
            next();
            neg = true;
        }
        const std::int64_t v = expect_int().value;
        return neg ? -v : v;
    }

    // Pulls every --flag (and its arguments) out of the token stream.
    void extract_flags(Flags& c) {
        std::vector<Token> rest;
        std::optional<Token> group_tok;
        for (std::size_t i = 0; i < toks_.size(); ++i) {
            const Token& t = toks_[i];
            if (t.kind != Token::Kind::Flag) {
                rest.push_back(t);
                continue;
            }
            auto arg_ints = [&](int count) {
                std::vector<std::int64_t> vals;
                for (int k = 0; k < count; ++k) {
                    if (k > 0) {
                        ++i;
                        if (i >= toks_.size() || toks_[i].kind != Token::Kind::Punct || toks_[i].text != ",")
                            fail(toks_[std::min(i, toks_.size() - 1)], "expected one of {,} in --" + t.text + " argument");
                    }
                    ++i;
                    bool neg = false;
                    if (i < toks_.size() && toks_[i].kind == Token::Kind::Punct && toks_[i].text == "-") {
                        neg = true;
                        ++i;
                    }
                    if (i >= toks_.size() || toks_[i].kind != Token::Kind::Int)
                        fail(toks_[std::min(i, toks_.size() - 1)], "expected one of {INT} in --" + t.text + " argument");
                    vals.push_back(neg ? -toks_[i].value : toks_[i].value);
                }
                return vals;
            };
            if (t.text == "json") {
                c.json = true;
            } else if (t.text == "verify") {
                verify_ = true;
                verify_tok_ = t;
            } else if (t.text == "seed") {
                auto v = arg_ints(1);
                if (v[0] < 0) semantic(t, "--seed must be nonnegative");
                c.seed = static_cast<std::uint64_t>(v[0]);
            } else if (t.text == "group" || t.text == "curve") {
                if (group_tok) semantic(t, "only one of --group/--curve may be given");
                group_tok = t;
                auto v = arg_ints(t.text == "group" ? 2 : 3);
                for (auto x : v)
                    if (x > 1'000'000 || x < -1'000'000) semantic(t, "group parameter out of range");
                try {
                    c.group = t.text == "group" ? CurveGroup::torus(static_cast<int>(v[0]), static_cast<int>(v[1]))
                                                : CurveGroup::weierstrass(static_cast<int>(v[0]), static_cast<int>(v[1]),
                                                                          static_cast<int>(v[2]));
                } catch (const Error& e) {
                    semantic(t, e.what());
                }
            } else {
                fail(t, "unknown flag --" + t.text + "; expected one of {--group, --curve, --json, --seed, --verify}");
            }
        }
        toks_ = std::move(rest);
    }

    GroupElement point() {
        if (at_ident("O")) {
            next();
            return group_->zero();
        }
        const Token& at = expect_punct('(', "O, (");
        const std::int64_t x = signed_int();
        expect_punct(',', ",");
        const std::int64_t y = signed_int();
        expect_punct(')', ")");
        try {
            return group_->element(x, y);
        } catch (const Error& e) {
            semantic(at, e.what());
        }
    }

    // term := [INT "*"] "P" point | INT "*" "O" | "O"
    void term(Divisor& d, int sign) {
        std::int64_t mult = 1;
        if (peek().kind == Token::Kind::Int) {
            mult = next().value;
            expect_punct('*', "*");
        }
        if (mult > 1'000'000) semantic(peek(), "multiplicity too large");
        const int k = sign * static_cast<int>(mult);
        if (at_ident("O")) {
            next();
            d.add(group_->zero(), k);
        } else if (at_ident("PO")) {
            next();
            d.add(group_->zero(), k);
        } else if (at_ident("P")) {
            next();
            d.add(point(), k);
        } else {
            fail(peek(), "expected one of {P, O}, found " + describe(peek()));
        }
    }

    Divisor divisor() {
        Divisor d(*group_);
        int sign = 1;
        if (at_punct('-')) {
            next();
            sign = -1;
        }
        term(d, sign);
        while (at_punct('+') || at_punct('-')) {
            sign = next().text == "+" ? 1 : -1;
            term(d, sign);
        }
        return d;
    }

    SurfaceSpec surface() {
        const Token& at = peek();
        if (at_ident("dec")) {
            next();
            expect_punct('(', "(");
            Divisor d = divisor();
            expect_punct(')', ")");
            if (d.degree() > 0)
                semantic(at, "dec(e) needs deg e <= 0, got " + std::to_string(d.degree()));
            return {SurfaceFamily::Decomposable, std::move(d), std::nullopt};
        }
        if (at_ident("ind0")) {
            next();
            return {SurfaceFamily::Indec0, std::nullopt, std::nullopt};
        }
        if (at_ident("indm1")) {
            next();
            expect_punct('(', "(");
            GroupElement p0 = point();
            expect_punct(')', ")");
            return {SurfaceFamily::IndecMinus1, std::nullopt, p0};
        }
        fail(at, "expected one of {dec, ind0, indm1}, found " + describe(at));
    }

    SystemSpec system() {
        const Token& m = expect_int();
        if (m.value > 1000) semantic(m, "secancy too large");
        expect_ident("X0");
        expect_punct('+', "+");
        expect_punct('(', "(");
        Divisor d = divisor();
        expect_punct(')', ")");
        expect_ident("f");
        return {static_cast<int>(m.value), std::move(d)};
    }

    PointSpec pointspec() {
        const Token& at = peek();
        if (at_ident("pair")) {
            next();
            expect_punct('{', "{");
            GroupElement q = point();
            expect_punct(',', ",");
            GroupElement r = point();
            expect_punct('}', "}");
            return PointSpec::pair(q, r);
        }
        if (at_ident("onX0") || at_ident("onX1") || at_ident("gen")) {
            const std::string kind = next().text;
            expect_punct('@', "@");
            GroupElement p = point();
            if (kind == "onX0") return PointSpec::on_x0(p);
            if (kind == "onX1") return PointSpec::on_x1(p);
            return PointSpec::generic(p);
        }
        fail(at, "expected one of {onX0, onX1, gen, pair}, found " + describe(at));
    }

    StepTemplate step() {
        using K = RandomStep::Kind;
        using R = RandomStep::Relation;
        const Token& at = peek();
        const bool fixed_kind = at_ident("onX0") || at_ident("onX1") || at_ident("gen");
        if (at_ident("pair") && toks_[pos_ + 1].text == "{") return pointspec();
        if (fixed_kind && toks_[pos_ + 1].text == "@" &&
            (toks_[pos_ + 2].text == "(" || toks_[pos_ + 2].text == "O"))
            return pointspec();
        if (at.kind != Token::Kind::Ident)
            fail(at, "expected one of {onX0, onX1, gen, focal, pair, any}, found " + describe(at));
        K kind;
        if (at.text == "onX0") kind = K::OnX0;
        else if (at.text == "onX1") kind = K::OnX1;
        else if (at.text == "gen") kind = K::Generic;
        else if (at.text == "focal") kind = K::Focal;
        else if (at.text == "pair") kind = K::Pair;
        else if (at.text == "any") kind = K::Any;
        else fail(at, "expected one of {onX0, onX1, gen, focal, pair, any}, found " + describe(at));
        next();
        expect_punct('@', "@");
        R rel;
        if (at_ident("any")) rel = R::Any;
        else if (at_ident("same")) rel = R::SameAsPrevious;
        else if (at_ident("new")) rel = R::DistinctFromPrevious;
        else fail(peek(), "expected one of {any, same, new, O, (}, found " + describe(peek()));
        next();
        return RandomStep{kind, rel};
    }

    NagataTarget target() {
        using K = NagataTarget::Kind;
        const Token& at = peek();
        if (at.kind == Token::Kind::Ident) {
            if (at.text == "dectriv") return next(), NagataTarget{K::DecTrivial, 0};
            if (at.text == "dec0") return next(), NagataTarget{K::DecZero, 0};
            if (at.text == "dec1") return next(), NagataTarget{K::DecOne, 0};
            if (at.text == "ind0") return next(), NagataTarget{K::Indec0, 0};
            if (at.text == "indm1") return next(), NagataTarget{K::IndecMinus1, 0};
            if (at.text.size() > 3 && at.text.size() < 8 && at.text.rfind("dec", 0) == 0 &&
                at.text.find_first_not_of("0123456789", 3) == std::string::npos && at.text[3] != '0') {
                next();
                return {K::DecHigh, std::stoi(at.text.substr(3))};
            }
        }
        fail(at, "expected one of {dectriv, dec0, dec1, decK, ind0, indm1}, found " + describe(at));
    }

    static void check_family(const SurfaceSpec& s, const PointSpec& x, const Token& at) {
        const bool pair = x.kind() == PointSpec::Kind::Pair;
        if (s.family == SurfaceFamily::IndecMinus1 && !pair)
            semantic(at, "points of indm1 are written pair{q,r}");
        if (s.family != SurfaceFamily::IndecMinus1 && pair)
            semantic(at, "pair{q,r} only names points of indm1");
        if (s.family == SurfaceFamily::Indec0 && x.kind() == PointSpec::Kind::OnX1)
            semantic(at, "ind0 has no section X1");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::optional<CurveGroup> group_;
    bool verify_ = false;
    bool verify_used_ = false;
    std::optional<Token> verify_tok_;
};

std::string format_surface(const SurfaceSpec& s) {
    switch (s.family) {
    case SurfaceFamily::Decomposable: return "dec(" + format_divisor(*s.e_divisor) + ")";
    case SurfaceFamily::Indec0: return "ind0";
    case SurfaceFamily::IndecMinus1: return "indm1(" + point_label(*s.p0) + ")";
    }
    return {};
}

std::string format_system(const SystemSpec& s) {
    return std::to_string(s.m) + "X0+(" + format_divisor(s.b) + ")f";
}

const char* yes(bool b) { return b ? "true" : "false"; }

template <class T>
std::string opt_text(const std::optional<T>& v) {
    if (!v) return "none";
    if constexpr (std::is_same_v<T, bool>) return yes(*v);
    else return std::to_string(*v);
}

void print_trajectory(std::ostream& out, const Trajectory& t) {
    out << "start " << t.models.front().describe() << "\n";
    for (std::size_t i = 0; i < t.results.size(); ++i) {
        const auto& r = t.results[i];
        out << "step " << i + 1 << " " << t.points[i].to_string() << " [" << rule_name(r.rule) << "] -> "
            << r.model.describe() << " (e=" << r.model.invariant_e() << ", Y0=" << y0_name(r.y0_note) << ")\n";
    }
}

struct Runner {
    const Command& cmd;
    std::ostream& out;

    void operator()(const Analyze& a) const {
        const SurfaceModel s = a.surface.model(cmd.group);
        const SurfaceDivisorClass h = a.system.cls();
        const SystemAnalysis r = analyze(s, h);
        if (cmd.json) {
            out << to_json(r).dump(2) << "\n";
            return;
        }
        out << "surface " << s.describe() << "\nsystem " << h.to_string() << "\n"
            << "h0 " << r.h0 << "\nh1 " << r.h1 << "\nbpf " << yes(r.bpf) << "\nvery_ample " << yes(r.very_ample)
            << "\ngeneric_irreducible " << yes(r.generic_irreducible) << "\ngeneric_smooth "
            << opt_text(r.generic_smooth) << "\ngenus_generic " << opt_text(r.genus_generic) << "\ndegree "
            << r.degree << "\nambient " << opt_text(r.ambient) << "\n";
    }

    void operator()(const Classify& c) const {
        const SurfaceModel s = c.surface.model(cmd.group);
        const ScrollModel m = classify_scroll(s, class_of(c.system.b));
        if (cmd.json) {
            out << to_json(m).dump(2) << "\n";
            return;
        }
        out << "surface " << s.describe() << "\nsystem " << c.system.cls().to_string() << "\n"
            << "model " << tag_name(m.tag) << "\nbirational " << yes(m.birational) << "\nmap_degree "
            << m.map_degree << "\nscroll_degree " << m.scroll_degree << "\nambient P^" << m.ambient
            << "\nspeciality " << m.speciality << "\nsingular_locus " << singular_name(m.singular_locus) << "\n";
        if (m.generation)
            out << "generation C" << m.generation->left_degree << " -("
                << correspondence_name(m.generation->correspondence) << ")-> C" << m.generation->right_degree
                << ", united points " << m.generation->united_points << "\n";
        for (const auto& f : m.families) {
            out << "family " << family_kind_name(f.kind) << " deg a>=" << f.min_deg_a << " curve degree deg a + "
                << f.degree_offset << " normality " << normality_name(f.normality.mode);
            if (f.normality.mode == Normality::Mode::UpTo || f.normality.mode == Normality::Mode::Exactly)
                out << " " << f.normality.deg;
            if (f.note != FamilyNote::None) out << " (" << note_name(f.note) << ")";
            out << "\n";
        }
    }

    void operator()(const Elm& e) const {
        const SurfaceModel s = e.surface.model(cmd.group);
        const ElmResult r = elm(s, e.x);
        if (cmd.json) {
            out << to_json(r).dump(2) << "\n";
            return;
        }
        out << s.describe() << " --" << e.x.to_string() << "--> " << r.model.describe() << "\nrule "
            << rule_name(r.rule) << "\ne " << s.invariant_e() << " -> " << r.model.invariant_e() << "\ne_class "
            << r.e_class_new.to_string() << "\ny0 " << y0_name(r.y0_note) << "\n";
    }

    void operator()(const Walk& w) const {
        const Trajectory t = walk(w.surface.model(cmd.group), w.steps, cmd.seed);
        if (cmd.json) {
            out << to_json(t).dump(2) << "\n";
            return;
        }
        print_trajectory(out, t);
    }

    void operator()(const Table& t) const {
        const auto rows = emit_table(t.n, cmd.group);
        if (cmd.json) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : rows) arr.push_back(to_json(r));
            out << arr.dump(2) << "\n";
            return;
        }
        out << render_table(t.n, rows);
    }

    void operator()(const Nagata& n) const {
        const NagataPlan plan = nagata_plan(n.target);
        std::optional<Trajectory> traj;
        if (n.verify) {
            traj = execute_plan(plan, cmd.group, cmd.seed);
            if (!n.target.matches(traj->models.back()))
                throw Error(ErrorCode::UnreachableTarget, "plan for " + n.target.to_string() + " ended at " +
                                                              traj->models.back().describe());
        }
        if (cmd.json) {
            nlohmann::json j = to_json(plan);
            if (traj) {
                j["trajectory"] = to_json(*traj);
                j["reached"] = true;
            }
            out << j.dump(2) << "\n";
            return;
        }
        out << "target " << n.target.to_string() << "\nlength " << plan.length << "\n";
        for (std::size_t i = 0; i < plan.steps.size(); ++i) out << "  " << i + 1 << ". " << to_string(plan.steps[i]) << "\n";
        if (traj) {
            print_trajectory(out, *traj);
            out << "reached " << traj->models.back().describe() << "\n";
        }
    }

    void operator()(const MinCurves& m) const {
        const SurfaceModel s = m.surface.model(cmd.group);
        const SurfacePointDescriptor x = tau(s, m.pair.q(), m.pair.r());
        const auto curves = min_curves_through(s, x);
        if (cmd.json) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& c : curves) {
                const auto cls = c.divisor_class(s);
                arr.push_back({{"q", point_label(c.q)}, {"m", cls.m}, {"b", to_json(cls.b)}});
            }
            out << nlohmann::json{{"generator", point_label(x.generator())}, {"focal", x.is_focal()}, {"min_curves", arr}}
                       .dump(2)
                << "\n";
            return;
        }
        out << "point " << m.pair.to_string() << " on generator " << point_label(x.generator()) << "f"
            << (x.is_focal() ? " (focal)" : "") << "\n";
        for (const auto& c : curves)
            out << "D_" << point_label(c.q) << " ~ " << c.divisor_class(s).to_string() << "\n";
    }

    void operator()(const Ram& r) const {
        const SurfaceModel s = r.surface.model(cmd.group);
        const auto pts = ramification_points(s, r.t);
        if (cmd.json) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& p : pts) arr.push_back(point_label(p));
            out << nlohmann::json{{"generator", point_label(r.t)}, {"ramification_points", arr}}.dump(2) << "\n";
            return;
        }
        out << "generator " << point_label(r.t) << "f: " << pts.size() << " ramification points";
        for (const auto& p : pts) out << " " << point_label(p);
        out << "\n";
    }
};

bool mentions_json(std::string_view input) {
    std::istringstream is{std::string(input)};
    std::string word;
    while (is >> word)
        if (word == "--json") return true;
    return false;
}

void report(const Error& e, bool json, std::ostream& out, std::ostream& err) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    if (!json) return;
    nlohmann::json j = error_json(e);
    if (const auto* pf = dynamic_cast<const ParseFailure*>(&e)) {
        j["line"] = pf->line();
        j["column"] = pf->column();
    }
    out << j.dump(2) << "\n";
}

}  // namespace

SurfaceModel SurfaceSpec::model(const CurveGroup& group) const {
    switch (family) {
    case SurfaceFamily::Decomposable: return SurfaceModel::decomposable(class_of(*e_divisor));
    case SurfaceFamily::IndecMinus1: return SurfaceModel::indec_minus1(*p0);
    case SurfaceFamily::Indec0: break;
    }
    return SurfaceModel::indec0(group);
}

Command parse(std::string_view input) { return Parser(lex(input)).parse(); }

std::string format_divisor(const Divisor& d) {
    if (d.empty()) return "0*O";
    std::string out;
    bool first = true;
    for (const auto& [p, k] : d.terms()) {
        const int mag = k < 0 ? -k : k;
        if (k < 0) out += "-";
        else if (!first) out += "+";
        if (mag != 1) out += std::to_string(mag) + "*";
        out += p.is_zero() ? std::string("O") : "P" + p.to_string();
        first = false;
    }
    return out;
}

std::string format(const Command& c) {
    std::string out = std::visit(
        [](const auto& b) -> std::string {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, Analyze>)
                return "analyze " + format_surface(b.surface) + " " + format_system(b.system);
            else if constexpr (std::is_same_v<T, Classify>)
                return "classify " + format_surface(b.surface) + " " + format_system(b.system);
            else if constexpr (std::is_same_v<T, Elm>)
                return "elm " + format_surface(b.surface) + " " + b.x.to_string();
            else if constexpr (std::is_same_v<T, Walk>) {
                std::string s = "walk " + format_surface(b.surface);
                for (const auto& st : b.steps) s += " " + to_string(st);
                return s;
            } else if constexpr (std::is_same_v<T, Table>)
                return "table " + std::to_string(b.n);
            else if constexpr (std::is_same_v<T, Nagata>)
                return "nagata " + b.target.to_string() + (b.verify ? " --verify" : "");
            else if constexpr (std::is_same_v<T, MinCurves>)
                return "mincurves " + format_surface(b.surface) + " " + b.pair.to_string();
            else
                return "ram " + format_surface(b.surface) + " " + point_label(b.t);
        },
        c.body);
    if (!(c.group == CurveGroup::torus(12, 12))) {
        if (c.group.is_torus())
            out += " --group " + std::to_string(c.group.param(0)) + "," + std::to_string(c.group.param(1));
        else
            out += " --curve " + std::to_string(c.group.param(0)) + "," + std::to_string(c.group.param(1)) + "," +
                   std::to_string(c.group.param(2));
    }
    if (c.seed != 0) out += " --seed " + std::to_string(c.seed);
    if (c.json) out += " --json";
    return out;
}

int run(const Command& c, std::ostream& out, std::ostream& err) {
    try {
        std::visit(Runner{c, out}, c.body);
        return 0;
    } catch (const Error& e) {
        report(e, c.json, out, err);
        return 1;
    }
}

int run_text(std::string_view input, std::ostream& out, std::ostream& err) {
    std::optional<Command> c;
    try {
        c = parse(input);
    } catch (const Error& e) {
        report(e, mentions_json(input), out, err);
        return 2;
    }
    return run(*c, out, err);
}

}  // namespace ersurf::cli
