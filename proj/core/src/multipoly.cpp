#include "adjointkit/multipoly.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace adjointkit {

namespace {

void trim(ExpVec &e)
{
	while (!e.empty() && e.back() == 0)
		e.pop_back();
}

std::uint64_t total_degree(const ExpVec &e)
{
	return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

} // namespace

bool GradedLexLess::operator()(const ExpVec &a, const ExpVec &b) const
{
	auto da = total_degree(a), db = total_degree(b);
	if (da != db)
		return da < db;
	std::size_t n = std::max(a.size(), b.size());
	for (std::size_t i = 0; i < n; ++i)
	{
		std::uint32_t ai = i < a.size() ? a[i] : 0;
		std::uint32_t bi = i < b.size() ? b[i] : 0;
		if (ai != bi)
			return ai < bi;
	}
	return false;
}

MultiPoly::MultiPoly(Rational c)
{
	if (!is_zero(c))
		terms_.emplace(ExpVec{}, std::move(c));
}

MultiPoly MultiPoly::var(int slot)
{
	assert(slot >= 0);
	MultiPoly p;
	ExpVec e(static_cast<std::size_t>(slot) + 1, 0);
	e.back() = 1;
	p.terms_.emplace(std::move(e), Rational(1));
	return p;
}

int MultiPoly::width() const
{
	std::size_t w = 0;
	for (const auto &[e, c] : terms_)
		w = std::max(w, e.size());
	return static_cast<int>(w);
}

void MultiPoly::add_term(ExpVec exps, const Rational &c)
{
	if (is_zero(c))
		return;
	trim(exps);
	auto it = terms_.find(exps);
	if (it == terms_.end())
	{
		terms_.emplace(std::move(exps), c);
		return;
	}
	it->second += c;
	if (is_zero(it->second))
		terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const
{
	MultiPoly r = *this;
	for (auto &[e, c] : r.terms_)
		c = -c;
	return r;
}

MultiPoly operator+(const MultiPoly &a, const MultiPoly &b)
{
	MultiPoly r = a;
	for (const auto &[e, c] : b.terms_)
		r.add_term(e, c);
	return r;
}

MultiPoly operator-(const MultiPoly &a, const MultiPoly &b)
{
	MultiPoly r = a;
	for (const auto &[e, c] : b.terms_)
		r.add_term(e, -c);
	return r;
}

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b)
{
	MultiPoly r;
	for (const auto &[ea, ca] : a.terms_)
		for (const auto &[eb, cb] : b.terms_)
		{
			ExpVec e(std::max(ea.size(), eb.size()), 0);
			for (std::size_t i = 0; i < ea.size(); ++i)
				e[i] += ea[i];
			for (std::size_t i = 0; i < eb.size(); ++i)
				e[i] += eb[i];
			r.add_term(std::move(e), ca * cb);
		}
	return r;
}

MultiPoly elementary_symmetric(int m, int k)
{
	assert(k >= 0 && m >= 0);
	if (k == 0)
		return MultiPoly(1);
	if (k > m)
		return {};
	// Row j of the table holds e_j(x_1..x_i) while sweeping i = 1..m.
	std::vector<MultiPoly> e(static_cast<std::size_t>(k) + 1);
	e[0] = MultiPoly(1);
	for (int i = 0; i < m; ++i)
	{
		MultiPoly xi = MultiPoly::var(i);
		for (int j = std::min(k, i + 1); j >= 1; --j)
			e[static_cast<std::size_t>(j)] += xi * e[static_cast<std::size_t>(j) - 1];
	}
	return e[static_cast<std::size_t>(k)];
}

MultiPoly set_var_zero(const MultiPoly &p, int slot)
{
	MultiPoly r;
	for (const auto &[e, c] : p.terms())
		if (static_cast<std::size_t>(slot) >= e.size() || e[static_cast<std::size_t>(slot)] == 0)
			r.add_term(e, c);
	return r;
}

MultiPoly drop_slot(const MultiPoly &p, int slot)
{
	MultiPoly r;
	for (const auto &[e, c] : p.terms())
	{
		ExpVec out;
		out.reserve(e.size());
		for (std::size_t i = 0; i < e.size(); ++i)
		{
			if (static_cast<int>(i) == slot)
			{
				assert(e[i] == 0);
				continue;
			}
			out.push_back(e[i]);
		}
		r.add_term(std::move(out), c);
	}
	return r;
}

std::string multipoly_text(const MultiPoly &p, int m)
{
	if (p.zero())
		return "0";
	std::string out;
	// Reverse canonical order: highest graded-lex monomial first.
	for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
	{
		const auto &[e, c] = *it;
		std::string cs = coeff_str(c);
		bool neg = cs.front() == '-';
		if (neg)
			cs.erase(cs.begin());
		if (out.empty())
			out += neg ? "-" : "";
		else
			out += neg ? " - " : " + ";

		std::string mono;
		for (std::size_t i = 0; i < e.size(); ++i)
		{
			if (e[i] == 0)
				continue;
			if (!mono.empty())
				mono += "*";
			mono += static_cast<int>(i) == m ? "t" : "x" + std::to_string(i + 1);
			if (e[i] > 1)
				mono += "^" + std::to_string(e[i]);
		}
		if (mono.empty())
			out += cs;
		else if (cs == "1")
			out += mono;
		else
			out += cs + "*" + mono;
	}
	return out;
}

} // namespace adjointkit
