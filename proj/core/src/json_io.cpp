#include "adjointkit/json_io.hpp"

#include <nlohmann/json.hpp>

namespace adjointkit {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string finish(const ordered_json &j) { return j.dump(2) + "\n"; }

template <Ring R> ordered_json series_obj(const TruncatedSeries<R> &s)
{
	ordered_json j;
	j["order"] = s.order();
	ordered_json coeffs = ordered_json::array();
	for (const R &c : s.coefficients())
		coeffs.push_back(coeff_str(c));
	j["coeffs"] = std::move(coeffs);
	return j;
}

template <Ring R> ordered_json pfk_obj(const PfkPolynomial<R> &p)
{
	ordered_json j;
	j["k"] = p.k;
	ordered_json coeffs = ordered_json::array();
	for (int d = 0; d <= p.k; ++d)
		coeffs.push_back(coeff_str(p.poly.coeff(d)));
	j["coeffs"] = std::move(coeffs);
	j["source"] = pfk_source_name(p.source);
	return j;
}

template <Ring R> ordered_json pfk_all_obj(const std::vector<PfkPolynomial<R>> &ps)
{
	ordered_json arr = ordered_json::array();
	for (const auto &p : ps)
		arr.push_back(pfk_obj(p));
	return arr;
}

template <Field R> ordered_json roots_obj(const RootSymmetrics<R> &r)
{
	ordered_json j;
	j["k"] = r.k;
	ordered_json e = ordered_json::array();
	for (const R &v : r.e)
		e.push_back(coeff_str(v));
	j["e"] = std::move(e);
	return j;
}

template <Ring R> ordered_json free_obj(const FreeElement<R> &e)
{
	ordered_json j;
	j["order"] = e.order();
	ordered_json terms = ordered_json::array();
	for (const auto &[w, c] : e.terms())
	{
		ordered_json t;
		t["word"] = word_text(w, default_alphabet());
		t["coeff"] = coeff_str(c);
		terms.push_back(std::move(t));
	}
	j["terms"] = std::move(terms);
	return j;
}

template <Ring R> ordered_json adjoint_obj(const AdjointResult<R> &a)
{
	ordered_json j;
	j["order"] = a.N;
	ordered_json per = ordered_json::array();
	for (const auto &z : a.per_degree)
		per.push_back(free_obj(z));
	j["per_degree"] = std::move(per);
	j["total"] = free_obj(a.total);
	return j;
}

ordered_json hl_obj(const HLResult &h)
{
	ordered_json j;
	j["m"] = h.m;
	j["k"] = h.k;
	ordered_json terms = ordered_json::array();
	for (const auto &[exps, c] : h.value.terms())
	{
		ordered_json t;
		std::vector<unsigned> padded(static_cast<std::size_t>(h.m) + 1, 0);
		for (std::size_t i = 0; i < exps.size(); ++i)
			padded[i] = exps[i];
		t["exponents"] = padded;
		t["coeff"] = coeff_str(c);
		terms.push_back(std::move(t));
	}
	j["terms"] = std::move(terms);
	return j;
}

ordered_json report_obj(const IdentityReport &r)
{
	ordered_json j;
	j["identity"] = r.identity;
	j["series"] = r.subject;
	j["pass"] = r.pass;
	ordered_json checks = ordered_json::array();
	for (const auto &line : r.lines)
	{
		ordered_json c;
		c["k"] = line.index;
		c["label"] = line.label;
		c["lhs"] = line.lhs;
		c["rhs"] = line.rhs;
		c["ok"] = line.ok;
		checks.push_back(std::move(c));
	}
	j["checks"] = std::move(checks);
	return j;
}

template <Ring R> std::string series_text_impl(const TruncatedSeries<R> &s)
{
	Polynomial<R> p(s.coefficients());
	return poly_text(p, "t") + "\n";
}

template <Ring R> std::string pfk_text_impl(const PfkPolynomial<R> &p)
{
	return std::string(pfk_source_name(p.source)) + ": " + poly_text(p.poly, "t") +
	       "\n";
}

template <Field R> std::string roots_text_impl(const RootSymmetrics<R> &r)
{
	std::string out = "e = [";
	for (std::size_t j = 0; j < r.e.size(); ++j)
	{
		if (j)
			out += ", ";
		out += coeff_str(r.e[j]);
	}
	return out + "]\n";
}

template <Ring R> std::string adjoint_text_impl(const AdjointResult<R> &a)
{
	std::string out = "total: " + free_text(a.total) + "\n";
	for (std::size_t i = 0; i < a.per_degree.size(); ++i)
		out += "z_" + std::to_string(i + 1) + ": " + free_text(a.per_degree[i]) + "\n";
	return out;
}

} // namespace

std::string json_series(const TruncatedSeries<Rational> &s) { return finish(series_obj(s)); }
std::string json_series(const TruncatedSeries<RationalFunction> &s)
{
	return finish(series_obj(s));
}

std::string json_pfk(const PfkPolynomial<Rational> &p) { return finish(pfk_obj(p)); }
std::string json_pfk(const PfkPolynomial<RationalFunction> &p)
{
	return finish(pfk_obj(p));
}
std::string json_pfk_all(const std::vector<PfkPolynomial<Rational>> &ps)
{
	return finish(pfk_all_obj(ps));
}
std::string json_pfk_all(const std::vector<PfkPolynomial<RationalFunction>> &ps)
{
	return finish(pfk_all_obj(ps));
}

std::string json_roots(const RootSymmetrics<Rational> &r) { return finish(roots_obj(r)); }
std::string json_roots(const RootSymmetrics<RationalFunction> &r)
{
	return finish(roots_obj(r));
}

std::string json_free(const FreeElement<Rational> &e) { return finish(free_obj(e)); }
std::string json_free(const FreeElement<RationalFunction> &e)
{
	return finish(free_obj(e));
}
std::string json_adjoint(const AdjointResult<Rational> &a) { return finish(adjoint_obj(a)); }
std::string json_adjoint(const AdjointResult<RationalFunction> &a)
{
	return finish(adjoint_obj(a));
}

std::string json_hl(const HLResult &h) { return finish(hl_obj(h)); }
std::string json_report(const IdentityReport &r) { return finish(report_obj(r)); }

std::string json_error(errc code, const std::string &detail)
{
	ordered_json j;
	j["error"] = errc_name(code);
	j["detail"] = detail;
	return finish(j);
}

std::string text_series(const TruncatedSeries<Rational> &s) { return series_text_impl(s); }
std::string text_series(const TruncatedSeries<RationalFunction> &s)
{
	return series_text_impl(s);
}
std::string text_pfk(const PfkPolynomial<Rational> &p) { return pfk_text_impl(p); }
std::string text_pfk(const PfkPolynomial<RationalFunction> &p)
{
	return pfk_text_impl(p);
}
std::string text_pfk_all(const std::vector<PfkPolynomial<Rational>> &ps)
{
	std::string out;
	for (const auto &p : ps)
		out += pfk_text_impl(p);
	return out;
}
std::string text_pfk_all(const std::vector<PfkPolynomial<RationalFunction>> &ps)
{
	std::string out;
	for (const auto &p : ps)
		out += pfk_text_impl(p);
	return out;
}
std::string text_roots(const RootSymmetrics<Rational> &r) { return roots_text_impl(r); }
std::string text_roots(const RootSymmetrics<RationalFunction> &r)
{
	return roots_text_impl(r);
}
std::string text_adjoint(const AdjointResult<Rational> &a) { return adjoint_text_impl(a); }
std::string text_adjoint(const AdjointResult<RationalFunction> &a)
{
	return adjoint_text_impl(a);
}

std::string text_hl(const HLResult &h)
{
	return multipoly_text(h.value, h.m) + "\n";
}

std::string text_report(const IdentityReport &r)
{
	std::string out;
	for (const auto &line : r.lines)
	{
		out += line.ok ? "[ ok ] " : "[FAIL] ";
		out += line.label + ": " + line.lhs;
		out += line.ok ? " == " : " != ";
		out += line.rhs + "\n";
	}
	out += r.pass ? "PASS\n" : "FAIL\n";
	return out;
}

} // namespace adjointkit
