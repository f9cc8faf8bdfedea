#include "cuspcert/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>

namespace cuspcert {

namespace {

enum class Dir { trunc, down, up };

// Render |v|'s exact decimal expansion (glibc prints all digits), keep 15
// significant digits, and step the last digit outward when a directed
// rounding dropped a nonzero tail.
std::string render(double v, Dir dir) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  const bool neg = v < 0;

  char buf[1200];
  std::snprintf(buf, sizeof buf, "%.1080e", std::fabs(v));
  const char* e = std::strchr(buf, 'e');
  int exp10 = std::atoi(e + 1);
  std::string digits;
  digits.reserve(16);
  bool dropped_nonzero = false;
  for (const char* p = buf; p != e; ++p) {
    if (*p == '.') continue;
    if (digits.size() < 15)
      digits.push_back(*p);
    else if (*p != '0')
      dropped_nonzero = true;
  }

  const bool outward = dropped_nonzero && ((dir == Dir::down && neg) ||
                                           (dir == Dir::up && !neg));
  if (outward) {
    int i = static_cast<int>(digits.size()) - 1;
    for (; i >= 0; --i) {
      if (digits[i] != '9') {
        ++digits[i];
        break;
      }
      digits[i] = '0';
    }
    if (i < 0) {
      digits.insert(digits.begin(), '1');
      digits.pop_back();
      ++exp10;
    }
  }

  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();

  std::string out = neg ? "-" : "";
  if (exp10 >= -4 && exp10 < 15) {
    if (exp10 >= 0) {
      if (static_cast<int>(digits.size()) <= exp10 + 1) {
        out += digits;
        out.append(exp10 + 1 - digits.size(), '0');
      } else {
        out += digits.substr(0, exp10 + 1) + "." + digits.substr(exp10 + 1);
      }
    } else {
      out += "0.";
      out.append(-exp10 - 1, '0');
      out += digits;
    }
  } else {
    out += digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    char tail[16];
    std::snprintf(tail, sizeof tail, "e%+03d", exp10);
    out += tail;
  }
  return out;
}

}  // namespace

std::string sig15(double v) { return render(v, Dir::trunc); }
std::string sig15_down(double v) { return render(v, Dir::down); }
std::string sig15_up(double v) { return render(v, Dir::up); }

std::string hex_float(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%a", v);
  return buf;
}

}  // namespace cuspcert
