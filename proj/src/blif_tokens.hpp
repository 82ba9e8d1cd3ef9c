//
// sfqmap -- shared BLIF line tokenizer (internal)
//

#pragma once

#include <cctype>
#include <string>
#include <vector>

namespace sfqmap::detail {

struct Token {
	std::string text;
	int line;
	int column;
};

// Logical lines of whitespace-separated tokens; '#' comments and '\'
// line continuations handled.
inline std::vector<std::vector<Token>> tokenize_blif_lines(const std::string &text)
{
	std::vector<std::vector<Token>> lines;
	std::vector<Token> current;
	int line = 1, column = 1;
	size_t i = 0;
	bool continued = false;

	auto flush = [&]() {
		if (!current.empty() && !continued) {
			lines.push_back(std::move(current));
			current.clear();
		}
	};

	while (i < text.size()) {
		char c = text[i];
		if (c == '#') {
			while (i < text.size() && text[i] != '\n')
				i++;
			continue;
		}
		if (c == '\\' && i + 1 < text.size() &&
				(text[i + 1] == '\n' ||
					(text[i + 1] == '\r' && i + 2 < text.size() &&
						text[i + 2] == '\n'))) {
			continued = true;
			i += text[i + 1] == '\r' ? 3 : 2;
			line++;
			column = 1;
			continue;
		}
		if (c == '\n') {
			continued = false;
			flush();
			i++;
			line++;
			column = 1;
			continue;
		}
		if (isspace((unsigned char)c)) {
			i++;
			column++;
			continue;
		}
		int start_col = column;
		std::string tok;
		while (i < text.size() && !isspace((unsigned char)text[i]) && text[i] != '#') {
			tok += text[i++];
			column++;
		}
		current.push_back({tok, line, start_col});
	}
	continued = false;
	flush();
	return lines;
}

} // namespace sfqmap::detail
