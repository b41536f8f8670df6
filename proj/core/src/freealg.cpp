#include "adjointkit/freealg.hpp"

namespace adjointkit {

const std::vector<std::string> &default_alphabet()
{
	static const std::vector<std::string> names{"x", "y"};
	return names;
}

std::string word_text(const Word &w, const std::vector<std::string> &alphabet)
{
	std::string out;
	for (char g : w)
	{
		auto i = static_cast<std::size_t>(g);
		assert(i < alphabet.size());
		out += alphabet[i];
	}
	return out;
}

} // namespace adjointkit
