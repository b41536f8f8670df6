#pragma once

#include <cassert>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "adjointkit/report.hpp"
#include "adjointkit/series.hpp"

namespace adjointkit {

/// A word over the generator alphabet; each char holds a generator index.
using Word = std::string;

/// Canonical word order: by length, then lexicographic over the alphabet.
struct WordLess {
	bool operator()(const Word &a, const Word &b) const
	{
		if (a.size() != b.size())
			return a.size() < b.size();
		return a < b;
	}
};

constexpr char gen_x = 0;
constexpr char gen_y = 1;

/// Default two-letter alphabet used everywhere in this library.
const std::vector<std::string> &default_alphabet();

/// Renders a word with the given generator names, e.g. "xxy".
std::string word_text(const Word &w, const std::vector<std::string> &alphabet);

/// Element of the free associative algebra truncated at a maximum word
/// length. Words longer than `order` are dropped by every operation.
template <Ring R> class FreeElement
{
  public:
	using TermMap = std::map<Word, R, WordLess>;

	explicit FreeElement(int order) : order_(order) { assert(order >= 0); }

	static FreeElement scalar(const R &c, int order)
	{
		FreeElement e(order);
		e.add_term(Word{}, c);
		return e;
	}
	static FreeElement generator(char g, int order)
	{
		FreeElement e(order);
		e.add_term(Word(1, g), R(1));
		return e;
	}

	int order() const { return order_; }
	const TermMap &terms() const { return terms_; }
	bool zero() const { return terms_.empty(); }

	R coeff(const Word &w) const
	{
		auto it = terms_.find(w);
		return it == terms_.end() ? R(0) : it->second;
	}

	void add_term(const Word &w, const R &c)
	{
		if (is_zero(c) || static_cast<int>(w.size()) > order_)
			return;
		auto it = terms_.find(w);
		if (it == terms_.end())
		{
			terms_.emplace(w, c);
			return;
		}
		it->second = it->second + c;
		if (is_zero(it->second))
			terms_.erase(it);
	}

	FreeElement operator-() const
	{
		FreeElement r = *this;
		for (auto &[w, c] : r.terms_)
			c = -c;
		return r;
	}
	friend FreeElement operator+(const FreeElement &a, const FreeElement &b)
	{
		check_orders(a, b);
		FreeElement r = a;
		for (const auto &[w, c] : b.terms_)
			r.add_term(w, c);
		return r;
	}
	friend FreeElement operator-(const FreeElement &a, const FreeElement &b)
	{
		check_orders(a, b);
		FreeElement r = a;
		for (const auto &[w, c] : b.terms_)
			r.add_term(w, -c);
		return r;
	}
	friend FreeElement operator*(const FreeElement &a, const R &s)
	{
		FreeElement r(a.order_);
		for (const auto &[w, c] : a.terms_)
			r.add_term(w, c * s);
		return r;
	}
	friend FreeElement operator*(const R &s, const FreeElement &a) { return a * s; }

	friend bool operator==(const FreeElement &a, const FreeElement &b)
	{
		return a.order_ == b.order_ && a.terms_ == b.terms_;
	}

  private:
	static void check_orders(const FreeElement &a, const FreeElement &b)
	{
		if (a.order_ != b.order_)
			throw kit_error(errc::domain_mismatch,
			                "free elements of order " + std::to_string(a.order_) +
			                    " and " + std::to_string(b.order_));
	}

	template <Ring S>
	friend FreeElement<S> free_mul(const FreeElement<S> &, const FreeElement<S> &);

	TermMap terms_;
	int order_;
};

template <Ring R> bool is_zero(const FreeElement<R> &e) { return e.zero(); }

/// Concatenation product; words beyond the shared order are discarded.
template <Ring R>
FreeElement<R> free_mul(const FreeElement<R> &a, const FreeElement<R> &b)
{
	FreeElement<R>::check_orders(a, b);
	FreeElement<R> r(a.order());
	for (const auto &[wa, ca] : a.terms())
	{
		if (static_cast<int>(wa.size()) > a.order())
			continue;
		for (const auto &[wb, cb] : b.terms())
		{
			if (static_cast<int>(wa.size() + wb.size()) > a.order())
				continue;
			r.add_term(wa + wb, ca * cb);
		}
	}
	return r;
}

/// [a, b]_q = a b - q b a.
template <Ring R>
FreeElement<R> q_bracket(const FreeElement<R> &a, const FreeElement<R> &b, const R &q)
{
	return free_mul(a, b) - free_mul(b, a) * q;
}

/// Words of exactly the given length (the degree-(len-1) slice of an adjoint
/// expansion keeps len-1 letters x and one y).
template <Ring R> FreeElement<R> length_slice(const FreeElement<R> &e, int len)
{
	FreeElement<R> r(e.order());
	for (const auto &[w, c] : e.terms())
		if (static_cast<int>(w.size()) == len)
			r.add_term(w, c);
	return r;
}

/// (ad x)^q(y) from the elementary symmetric functions e_0..e_k of q:
/// sum_j (-1)^j e_j x^(k-j) y x^j.
template <Ring R>
FreeElement<R> ad_q_power(std::span<const R> e, int k, int order)
{
	if (e.size() != static_cast<std::size_t>(k) + 1 || !(e[0] == R(1)))
		throw kit_error(errc::bad_symmetrics,
		                "need e_0..e_k with e_0 = 1 for k = " + std::to_string(k));
	FreeElement<R> r(order);
	for (int j = 0; j <= k; ++j)
	{
		Word w(static_cast<std::size_t>(k) + 1, gen_x);
		w[static_cast<std::size_t>(k - j)] = gen_y;
		R c = e[static_cast<std::size_t>(j)];
		r.add_term(w, j % 2 == 0 ? c : -c);
	}
	return r;
}

/// The literal nested bracket [x,[x,...,[x,y]_{q_1},...]_{q_{k-1}}]_{q_k}.
template <Ring R> FreeElement<R> nested_bracket(std::span<const R> qs, int order)
{
	auto x = FreeElement<R>::generator(gen_x, order);
	auto acc = FreeElement<R>::generator(gen_y, order);
	for (const R &q : qs)
		acc = q_bracket(x, acc, q);
	return acc;
}

/// Elementary symmetric functions e_0..e_n of an explicit value list, by the
/// product recurrence; used to bridge nested_bracket and ad_q_power.
template <Ring R> std::vector<R> elementary_from_roots(std::span<const R> roots)
{
	std::vector<R> e(roots.size() + 1, R(0));
	e[0] = R(1);
	std::size_t used = 0;
	for (const R &r : roots)
	{
		++used;
		for (std::size_t j = used; j >= 1; --j)
			e[j] = e[j] + r * e[j - 1];
	}
	return e;
}

/// f(x) y f(x)^{-1} truncated at word length N+1, computed directly from the
/// series and its inverse.
template <Ring R>
FreeElement<R> conjugate_series(const TruncatedSeries<R> &f, int N)
{
	detail::require_unit_constant_term(f);
	detail::require_k_in_order<R>(N, f.order());
	int order = N + 1;
	auto inv = series_invert(f);
	FreeElement<R> left(order), right(order);
	for (int i = 0; i <= N; ++i)
	{
		Word xs(static_cast<std::size_t>(i), gen_x);
		left.add_term(xs, f.coeff(i));
		right.add_term(xs, inv.coeff(i));
	}
	auto y = FreeElement<R>::generator(gen_y, order);
	return free_mul(left, free_mul(y, right));
}

/// Per-degree slices z_k of the conjugation plus their total (y included).
template <Ring R> struct AdjointResult {
	int N = 0;
	std::vector<FreeElement<R>> per_degree; // index k-1 holds z_k
	FreeElement<R> total;
};

/// z_k = sum_{i=0..k} a_i D_{k-i}(f) x^i y x^{k-i} for k = 1..N, with the
/// D-values from the Wronski determinants.
template <Ring R> AdjointResult<R> zk_terms(const TruncatedSeries<R> &f, int N)
{
	detail::require_unit_constant_term(f);
	detail::require_k_in_order<R>(N, f.order());
	int order = N + 1;
	AdjointResult<R> res{N, {}, FreeElement<R>::generator(gen_y, order)};
	std::vector<R> d;
	d.reserve(static_cast<std::size_t>(N) + 1);
	for (int j = 0; j <= N; ++j)
		d.push_back(wronski_Dk(f, j));
	for (int k = 1; k <= N; ++k)
	{
		FreeElement<R> z(order);
		for (int i = 0; i <= k; ++i)
		{
			Word w(static_cast<std::size_t>(k) + 1, gen_x);
			w[static_cast<std::size_t>(i)] = gen_y;
			z.add_term(w, f.coeff(i) * d[static_cast<std::size_t>(k - i)]);
		}
		res.total = res.total + z;
		res.per_degree.push_back(std::move(z));
	}
	return res;
}

/// Renders "y + xy - yx + ..." in canonical word order.
template <Ring R>
std::string free_text(const FreeElement<R> &e,
                      const std::vector<std::string> &alphabet = default_alphabet())
{
	if (e.zero())
		return "0";
	std::string out;
	for (const auto &[w, c] : e.terms())
	{
		std::string cs = coeff_str(c);
		bool neg = !cs.empty() && cs.front() == '-';
		if (neg)
			cs.erase(cs.begin());
		if (out.empty())
			out += neg ? "-" : "";
		else
			out += neg ? " - " : " + ";
		std::string ws = word_text(w, alphabet);
		if (ws.empty())
			out += cs;
		else if (cs == "1")
			out += ws;
		else
			out += cs + "*" + ws;
	}
	return out;
}

} // namespace adjointkit

#include "adjointkit/freealg_verify.hpp"
