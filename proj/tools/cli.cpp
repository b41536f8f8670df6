#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <map>
#include <set>

#include "adjointkit/json_io.hpp"
#include "adjointkit/special.hpp"

namespace adjointkit::cli {

namespace {

[[noreturn]] void bad(const std::string &detail)
{
	throw kit_error(errc::bad_spec, detail);
}

int parse_int(const std::string &tok, const std::string &what)
{
	int value = 0;
	auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
	if (ec != std::errc() || p != tok.data() + tok.size())
		bad(what + " expects an integer, got \"" + tok + "\"");
	return value;
}

std::vector<std::string> split(const std::string &s, char sep)
{
	std::vector<std::string> out;
	std::size_t start = 0;
	while (true)
	{
		std::size_t pos = s.find(sep, start);
		out.push_back(s.substr(start, pos - start));
		if (pos == std::string::npos)
			return out;
		start = pos + 1;
	}
}

SeriesSpec parse_series_spec(const std::string &text)
{
	if (text == "exp")
		return SeriesSpec::named(series_kind::exp);
	if (text == "qexp")
		return SeriesSpec::named(series_kind::qexp);
	if (text == "geom")
		return SeriesSpec::named(series_kind::geom);
	if (text.starts_with("poly:"))
	{
		std::vector<Rational> coeffs;
		for (const std::string &piece : split(text.substr(5), ','))
			coeffs.push_back(parse_rational(piece));
		return SeriesSpec::explicit_list(std::move(coeffs));
	}
	if (text.starts_with("prodroots:"))
		return SeriesSpec::symbolic_roots(
		    parse_int(text.substr(10), "prodroots variable count"));
	bad("unknown series \"" + text + "\"");
}

void check_value_token(const std::string &flag, const std::string &tok)
{
	if (tok == "q")
		return;
	try
	{
		parse_rational(tok);
	}
	catch (const kit_error &)
	{
		throw kit_error(errc::bad_rational,
		                flag + " expects a rational or the symbol q, got \"" + tok +
		                    "\"");
	}
}

const std::set<std::string> known_verbs{"pfk", "invert", "conjugate",
                                        "roots", "hl",     "verify"};
const std::set<std::string> known_identities{
    "conjugation",  "ftxfx",      "pfk-mult",        "qexp-factorization",
    "qexp-shift", "hall-littlewood", "pfk-claim"};
const std::set<std::string> known_flags{"--identity", "--series", "--k",
                                        "--order",    "--method", "--t",
                                        "--s",        "--n",      "--m",
                                        "--claim",    "--format"};

struct RawFlags {
	std::map<std::string, std::pair<std::string, int>> values; // flag -> (value, pos)

	bool has(const std::string &f) const { return values.count(f) != 0; }
	const std::string &get(const std::string &f) const { return values.at(f).first; }
	int pos(const std::string &f) const { return values.at(f).second; }
};

RawFlags collect(const std::vector<std::string> &args)
{
	RawFlags raw;
	for (std::size_t i = 1; i < args.size(); i += 2)
	{
		const std::string &flag = args[i];
		if (!known_flags.count(flag))
			bad("unknown option \"" + flag + "\" at position " + std::to_string(i));
		if (i + 1 >= args.size())
			bad("option " + flag + " at position " + std::to_string(i) +
			    " is missing its value");
		if (raw.has(flag))
			bad("duplicate option " + flag + " at position " + std::to_string(i));
		raw.values[flag] = {args[i + 1], static_cast<int>(i + 1)};
	}
	return raw;
}

void require_allowed(const RawFlags &raw, const std::set<std::string> &allowed,
                     const std::string &context)
{
	for (const auto &[flag, value] : raw.values)
		if (!allowed.count(flag))
			bad("option " + flag + " at position " + std::to_string(value.second) +
			    " is not valid for " + context);
}

void fill_series(Command &c, const RawFlags &raw)
{
	c.uses_series = true;
	if (raw.has("--series"))
	{
		try
		{
			c.spec = parse_series_spec(raw.get("--series"));
		}
		catch (const kit_error &e)
		{
			throw kit_error(e.code(), e.detail() + " (position " +
			                              std::to_string(raw.pos("--series")) + ")");
		}
	}
}

void fill_order(Command &c, const RawFlags &raw, int default_order, int min_order)
{
	c.uses_order = true;
	c.order = raw.has("--order") ? parse_int(raw.get("--order"), "--order")
	                             : default_order;
	if (c.order < min_order)
		throw kit_error(errc::order_too_small,
		                "order " + std::to_string(c.order) + " is below the minimum " +
		                    std::to_string(min_order) + " for " + c.verb);
}

void fill_k(Command &c, const RawFlags &raw, int fallback)
{
	c.uses_k = true;
	c.k = raw.has("--k") ? parse_int(raw.get("--k"), "--k") : fallback;
	if (c.k < 0)
		bad("--k must be nonnegative");
}

void fill_t(Command &c, const RawFlags &raw, const char *fallback, bool q_only)
{
	c.uses_t = true;
	c.t_text = raw.has("--t") ? raw.get("--t") : fallback;
	check_value_token("--t", c.t_text);
	if (q_only && c.t_text != "q")
		bad("--t only accepts the symbol q for verb " + c.verb);
}

} // namespace

std::vector<std::string> Command::to_argv() const
{
	std::vector<std::string> out{verb};
	auto flag = [&out](const char *f, const std::string &v) {
		out.emplace_back(f);
		out.push_back(v);
	};
	if (!identity.empty())
		flag("--identity", identity);
	if (uses_series)
		flag("--series", spec.text());
	if (uses_m)
		flag("--m", std::to_string(m));
	if (uses_n)
		flag("--n", std::to_string(n));
	if (uses_k)
		flag("--k", std::to_string(k));
	if (uses_order)
		flag("--order", std::to_string(order));
	if (uses_method)
		flag("--method", method);
	if (uses_claim)
	{
		std::string joined;
		for (std::size_t i = 0; i < claim.size(); ++i)
		{
			if (i)
				joined += ",";
			joined += coeff_str(claim[i]);
		}
		flag("--claim", joined);
	}
	if (uses_t)
		flag("--t", t_text);
	if (uses_s)
		flag("--s", s_text);
	flag("--format", format);
	return out;
}

Command parse_command(const std::vector<std::string> &args, int default_order)
{
	if (args.empty())
		throw kit_error(errc::unknown_verb, "no verb given; expected one of pfk, "
		                                    "invert, conjugate, roots, hl, verify");
	if (!known_verbs.count(args[0]))
		throw kit_error(errc::unknown_verb, "unknown verb \"" + args[0] + "\"");

	Command c;
	c.verb = args[0];
	RawFlags raw = collect(args);

	if (raw.has("--format"))
	{
		c.format = raw.get("--format");
		if (c.format != "json" && c.format != "text")
			bad("--format must be json or text, got \"" + c.format + "\"");
	}

	if (c.verb == "pfk")
	{
		require_allowed(raw, {"--series", "--k", "--order", "--method", "--t",
		                      "--format"},
		                "verb pfk");
		fill_series(c, raw);
		fill_order(c, raw, default_order, 0);
		fill_k(c, raw, c.order);
		c.uses_method = true;
		if (raw.has("--method"))
		{
			c.method = raw.get("--method");
			if (c.method != "det" && c.method != "rec" && c.method != "conv" &&
			    c.method != "all")
				bad("--method must be det, rec, conv or all");
		}
		if (raw.has("--t"))
			fill_t(c, raw, "q", true);
	}
	else if (c.verb == "invert" || c.verb == "conjugate")
	{
		require_allowed(raw, {"--series", "--order", "--t", "--format"},
		                "verb " + c.verb);
		fill_series(c, raw);
		fill_order(c, raw, default_order, c.verb == "conjugate" ? 1 : 0);
		if (raw.has("--t"))
			fill_t(c, raw, "q", true);
	}
	else if (c.verb == "roots")
	{
		require_allowed(raw, {"--series", "--k", "--order", "--t", "--format"},
		                "verb roots");
		fill_series(c, raw);
		fill_order(c, raw, default_order, 0);
		fill_k(c, raw, c.order);
		if (raw.has("--t"))
			fill_t(c, raw, "q", true);
	}
	else if (c.verb == "hl")
	{
		require_allowed(raw, {"--m", "--k", "--format"}, "verb hl");
		c.uses_m = true;
		c.m = raw.has("--m") ? parse_int(raw.get("--m"), "--m") : 2;
		if (c.m < 1)
			bad("--m must be at least 1");
		fill_k(c, raw, 2);
	}
	else
	{
		if (!raw.has("--identity"))
			bad("verify requires --identity");
		c.identity = raw.get("--identity");
		if (!known_identities.count(c.identity))
			bad("unknown identity \"" + c.identity + "\"");

		if (c.identity == "conjugation")
		{
			require_allowed(raw, {"--identity", "--series", "--order", "--t",
			                      "--format"},
			                "identity conjugation");
			fill_series(c, raw);
			fill_order(c, raw, default_order, 1);
			if (raw.has("--t"))
				fill_t(c, raw, "q", true);
		}
		else if (c.identity == "ftxfx")
		{
			require_allowed(raw, {"--identity", "--series", "--order", "--t",
			                      "--format"},
			                "identity ftxfx");
			fill_series(c, raw);
			fill_order(c, raw, default_order, 0);
			fill_t(c, raw, "2", false);
		}
		else if (c.identity == "pfk-mult")
		{
			require_allowed(raw, {"--identity", "--series", "--k", "--order",
			                      "--s", "--t", "--format"},
			                "identity pfk-mult");
			fill_series(c, raw);
			fill_order(c, raw, default_order, 0);
			fill_k(c, raw, c.order);
			fill_t(c, raw, "3", false);
			c.uses_s = true;
			c.s_text = raw.has("--s") ? raw.get("--s") : "2";
			check_value_token("--s", c.s_text);
		}
		else if (c.identity == "qexp-factorization")
		{
			require_allowed(raw, {"--identity", "--series", "--k", "--order",
			                      "--format"},
			                "identity qexp-factorization");
			fill_series(c, raw);
			if (!raw.has("--series"))
				c.spec = SeriesSpec::named(series_kind::qexp);
			if (c.spec.kind != series_kind::qexp)
				bad("identity qexp-factorization requires the qexp series");
			fill_order(c, raw, default_order, 1);
			fill_k(c, raw, c.order);
			if (c.k < 1)
				bad("--k must be at least 1 for qexp-factorization");
		}
		else if (c.identity == "qexp-shift")
		{
			require_allowed(raw, {"--identity", "--series", "--n", "--order",
			                      "--format"},
			                "identity qexp-shift");
			fill_series(c, raw);
			if (!raw.has("--series"))
				c.spec = SeriesSpec::named(series_kind::qexp);
			if (c.spec.kind != series_kind::qexp)
				bad("identity qexp-shift requires the qexp series");
			c.uses_n = true;
			c.n = raw.has("--n") ? parse_int(raw.get("--n"), "--n") : 1;
			if (c.n < 0)
				bad("--n must be nonnegative");
			fill_order(c, raw, default_order, c.n);
		}
		else if (c.identity == "hall-littlewood")
		{
			require_allowed(raw, {"--identity", "--m", "--k", "--format"},
			                "identity hall-littlewood");
			c.uses_m = true;
			c.m = raw.has("--m") ? parse_int(raw.get("--m"), "--m") : 3;
			if (c.m < 1)
				bad("--m must be at least 1");
			fill_k(c, raw, 4);
		}
		else // pfk-claim
		{
			require_allowed(raw, {"--identity", "--series", "--k", "--order",
			                      "--claim", "--t", "--format"},
			                "identity pfk-claim");
			fill_series(c, raw);
			fill_order(c, raw, default_order, 0);
			fill_k(c, raw, c.order);
			if (raw.has("--t"))
				fill_t(c, raw, "q", true);
			if (!raw.has("--claim"))
				bad("identity pfk-claim requires --claim with k+1 comma-separated "
				    "coefficients");
			c.uses_claim = true;
			for (const std::string &piece : split(raw.get("--claim"), ','))
				c.claim.push_back(parse_rational(piece));
			if (static_cast<int>(c.claim.size()) != c.k + 1)
				bad("--claim needs exactly " + std::to_string(c.k + 1) +
				    " coefficients for k = " + std::to_string(c.k) + ", got " +
				    std::to_string(c.claim.size()));
		}
	}
	return c;
}

namespace {

bool wants_ratfunc(const Command &c)
{
	return c.spec.kind == series_kind::qexp || c.t_text == "q" || c.s_text == "q";
}

RationalFunction as_ratfunc(const std::string &tok)
{
	return tok == "q" ? RationalFunction::q() : RationalFunction(parse_rational(tok));
}

template <Ring R>
Polynomial<R> lift_claim(const std::vector<Rational> &claim)
{
	std::vector<R> c(claim.begin(), claim.end());
	return Polynomial<R>(std::move(c));
}

template <Ring R>
IdentityReport claim_report(const TruncatedSeries<R> &f, const Command &cmd)
{
	Polynomial<R> claimed = lift_claim<R>(cmd.claim);
	IdentityReport rep;
	rep.identity = "pfk-claim";
	rep.subject = cmd.spec.text() + ", k = " + std::to_string(cmd.k);
	PfkPolynomial<R> paths[3] = {pfk_determinant(f, cmd.k), pfk_recursion(f, cmd.k),
	                             pfk_convolution(f, cmd.k)};
	for (const auto &p : paths)
		rep.add(cmd.k, pfk_source_name(p.source), poly_text(p.poly, "t"),
		        poly_text(claimed, "t"), p.poly == claimed);
	return rep;
}

template <Ring R>
std::vector<PfkPolynomial<R>> pfk_paths(const TruncatedSeries<R> &f, const Command &c)
{
	std::vector<PfkPolynomial<R>> out;
	if (c.method == "det" || c.method == "all")
		out.push_back(pfk_determinant(f, c.k));
	if (c.method == "rec" || c.method == "all")
		out.push_back(pfk_recursion(f, c.k));
	if (c.method == "conv" || c.method == "all")
		out.push_back(pfk_convolution(f, c.k));
	return out;
}

RunResult report_result(const IdentityReport &rep, const Command &c)
{
	RunResult r;
	r.exit_code = rep.pass ? 0 : 1;
	r.out = c.format == "json" ? json_report(rep) : text_report(rep);
	if (!rep.pass)
		r.err = "identity " + rep.identity + " failed on " + rep.subject + "\n";
	return r;
}

template <Ring R> struct domain_of;
template <> struct domain_of<Rational> {
	static TruncatedSeries<Rational> realize(const SeriesSpec &s, int order)
	{
		return realize_rational(s, order);
	}
};
template <> struct domain_of<RationalFunction> {
	static TruncatedSeries<RationalFunction> realize(const SeriesSpec &s, int order)
	{
		return realize_ratfunc(s, order);
	}
};

template <Field R> RunResult run_series_verb(const Command &c)
{
	auto f = domain_of<R>::realize(c.spec, c.order);
	RunResult r;
	if (c.verb == "pfk")
	{
		auto ps = pfk_paths(f, c);
		if (c.method == "all")
			r.out = c.format == "json" ? json_pfk_all(ps) : text_pfk_all(ps);
		else
			r.out = c.format == "json" ? json_pfk(ps.front()) : text_pfk(ps.front());
	}
	else if (c.verb == "invert")
	{
		auto inv = series_invert(f);
		r.out = c.format == "json" ? json_series(inv) : text_series(inv);
	}
	else if (c.verb == "conjugate")
	{
		auto adj = zk_terms(f, c.order);
		r.out = c.format == "json" ? json_adjoint(adj) : text_adjoint(adj);
	}
	else // roots
	{
		auto rs = root_symmetrics(f, c.k);
		r.out = c.format == "json" ? json_roots(rs) : text_roots(rs);
	}
	return r;
}

template <Field R> RunResult run_series_identity(const Command &c)
{
	auto f = domain_of<R>::realize(c.spec, c.order);
	if (c.identity == "conjugation")
	{
		auto rep = verify_general_conjugation(f, c.order);
		rep.subject = c.spec.text() + ", order " + std::to_string(c.order);
		return report_result(rep, c);
	}
	if (c.identity == "ftxfx")
	{
		R t = [&] {
			if constexpr (std::is_same_v<R, RationalFunction>)
				return as_ratfunc(c.t_text);
			else
				return parse_rational(c.t_text);
		}();
		auto rep = verify_ftxfx(f, t, c.order);
		rep.subject = c.spec.text() + ", t = " + c.t_text;
		return report_result(rep, c);
	}
	if (c.identity == "pfk-mult")
	{
		auto value = [&](const std::string &tok) {
			if constexpr (std::is_same_v<R, RationalFunction>)
				return as_ratfunc(tok);
			else
				return parse_rational(tok);
		};
		auto rep = verify_pfk_mult(f, value(c.s_text), value(c.t_text), c.k);
		rep.subject = c.spec.text() + ", s = " + c.s_text + ", t = " + c.t_text;
		return report_result(rep, c);
	}
	// pfk-claim
	return report_result(claim_report(f, c), c);
}

} // namespace

RunResult run_command(const Command &c)
{
	try
	{
		if (c.verb == "hl")
		{
			auto h = hall_littlewood_Qk(c.m, c.k);
			return {0, c.format == "json" ? json_hl(h) : text_hl(h), ""};
		}
		if (c.verb == "verify")
		{
			if (c.identity == "qexp-factorization")
			{
				auto rep = verify_qexp_factorization(c.k);
				return report_result(rep, c);
			}
			if (c.identity == "qexp-shift")
			{
				auto rep = verify_qexp_shift(c.n, c.order);
				return report_result(rep, c);
			}
			if (c.identity == "hall-littlewood")
			{
				auto rep = verify_hall_littlewood(c.m, c.k);
				return report_result(rep, c);
			}
			return wants_ratfunc(c) ? run_series_identity<RationalFunction>(c)
			                        : run_series_identity<Rational>(c);
		}
		return wants_ratfunc(c) ? run_series_verb<RationalFunction>(c)
		                        : run_series_verb<Rational>(c);
	}
	catch (const kit_error &e)
	{
		return {2, json_error(e.code(), e.detail()),
		        std::string("error: ") + e.what() + "\n"};
	}
}

RunResult run_main(const std::vector<std::string> &args, int default_order)
{
	try
	{
		return run_command(parse_command(args, default_order));
	}
	catch (const kit_error &e)
	{
		return {2, json_error(e.code(), e.detail()),
		        std::string("error: ") + e.what() + "\n"};
	}
}

int default_order_from_env()
{
	const char *env = std::getenv("ADJOINT_KIT_ORDER");
	if (env == nullptr || *env == '\0')
		return 8;
	std::string tok(env);
	int value = 0;
	auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
	if (ec != std::errc() || p != tok.data() + tok.size() || value < 0)
		throw kit_error(errc::order_too_small,
		                "ADJOINT_KIT_ORDER must be a nonnegative integer, got \"" +
		                    tok + "\"");
	return value;
}

} // namespace adjointkit::cli
