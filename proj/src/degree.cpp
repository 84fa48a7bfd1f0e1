#include "fuzzymin/degree.hpp"

#include <cctype>

#include "fuzzymin/errors.hpp"

namespace fuzzymin {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class pow10(std::size_t exponent) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, exponent);
    return r;
}

} // namespace

Degree Degree::fraction(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw UsageError("degree with zero denominator");
    mpq_class q(mpz_class(std::to_string(numerator)), mpz_class(std::to_string(denominator)));
    q.canonicalize();
    return from_rational(std::move(q));
}

Degree Degree::from_rational(mpq_class value) {
    value.canonicalize();
    if (sgn(value) < 0 || value > 1)
        throw UsageError("degree " + value.get_str() + " lies outside [0,1]");
    return Degree(std::move(value));
}

Degree Degree::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty degree literal", 0);

    mpq_class value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed fraction '" + std::string(text) + "'", 0);
        mpz_class d{std::string(den)};
        if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
        value = mpq_class(mpz_class(std::string(num)), d);
    } else {
        auto dot = s.find('.');
        auto whole = s.substr(0, dot);
        std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
        if (whole.empty() && frac.empty())
            throw ParseError("malformed decimal '" + std::string(text) + "'", 0);
        if ((!whole.empty() && !all_digits(whole)) || (dot != std::string_view::npos && !all_digits(frac)))
            throw ParseError("malformed decimal '" + std::string(text) + "'", 0);
        mpz_class w = whole.empty() ? mpz_class(0) : mpz_class(std::string(whole));
        mpz_class f = frac.empty() ? mpz_class(0) : mpz_class(std::string(frac));
        mpz_class scale = pow10(frac.size());
        value = mpq_class(w * scale + f, scale);
    }
    value.canonicalize();
    if (value > 1) throw ParseError("degree '" + std::string(text) + "' exceeds 1", 0);
    return Degree(std::move(value));
}

std::string Degree::to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Degree::to_decimal_string() const {
    mpz_class den = value_.get_den();
    std::size_t twos = 0, fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) { den /= 2; ++twos; }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) { den /= 5; ++fives; }
    if (den != 1) return to_string();
    if (value_.get_den() == 1) return to_string();

    const std::size_t digits = std::max(twos, fives);
    mpz_class scaled = value_.get_num() * pow10(digits) / value_.get_den();
    std::string s = scaled.get_str();
    if (s.size() <= digits) s.insert(0, digits - s.size() + 1, '0');
    s.insert(s.size() - digits, ".");
    while (s.back() == '0') s.pop_back();
    return s;
}

} // namespace fuzzymin
