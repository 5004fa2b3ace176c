#include "lomax/dataset.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

namespace lomax {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

} // namespace

const Dataset& embedded_dataset()
{
    static const Dataset data{
        "mobility-x0.25",
        {3.051, 2.779, 2.604, 2.371, 2.214, 2.045, 1.715, 1.525, 1.296, 1.154, 1.016,
         0.7948, 0.7007, 0.6292, 0.6175, 0.6449, 0.8881, 1.115, 1.397, 1.506, 1.528},
        DataSource::Embedded};
    return data;
}

Dataset parse_dataset(std::istream& in, const std::string& name)
{
    Dataset data{name, {}, DataSource::File};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view = line;
        if (const auto hash = view.find('#'); hash != std::string_view::npos)
            view = view.substr(0, hash);
        view = trim(view);
        if (view.empty())
            continue;
        double x = 0.0;
        const auto [ptr, ec] = std::from_chars(view.data(), view.data() + view.size(), x);
        if (ec != std::errc() || ptr != view.data() + view.size())
            throw DataError(name + ":" + std::to_string(lineno) + ": not a number: '" + std::string(view) + "'");
        if (!(x > 0.0) || !std::isfinite(x))
            throw DataError(name + ":" + std::to_string(lineno) + ": observations must be positive, got " +
                            std::string(view));
        data.values.push_back(x);
    }
    if (in.bad())
        throw DataError(name + ": read error");
    if (data.values.empty())
        throw DataError(name + ": no observations");
    return data;
}

Dataset read_dataset(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw DataError("cannot open data file " + path.string());
    return parse_dataset(in, path.string());
}

void write_dataset(std::ostream& out, const std::vector<double>& values)
{
    std::array<char, 64> buf{};
    for (double x : values) {
        const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
        out.write(buf.data(), ptr - buf.data());
        out.put('\n');
    }
}

} // namespace lomax
