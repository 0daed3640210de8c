#include "tap/splits.hpp"

#include <stdexcept>
#include <string>

namespace tap {

SplitSpec SplitSpec::make(DayRange train, DayIndex test_start, int week_count) {
    SplitSpec s;
    s.train = train;
    for (int k = 0; k < week_count; ++k) {
        const DayIndex first = test_start + 7 * k;
        s.test_weeks.push_back({first, first + 6});
    }
    s.validate();
    return s;
}

void SplitSpec::validate() const {
    if (train.first > train.last) throw std::invalid_argument("empty training range");
    if (test_weeks.empty()) throw std::invalid_argument("no test weeks");
    for (std::size_t k = 0; k < test_weeks.size(); ++k) {
        const DayRange& w = test_weeks[k];
        if (w.length() != 7) {
            throw std::invalid_argument("test week " + std::to_string(k + 1) + " is not 7 days");
        }
        if (k > 0 && w.first - test_weeks[k - 1].last != 1) {
            throw std::invalid_argument("test weeks are not consecutive at week " +
                                        std::to_string(k + 1));
        }
    }
    if (test_start() <= train.last) {
        throw std::invalid_argument("test period overlaps the training range");
    }
    if (validation_week(0).first.ordinal < 0) {
        throw std::invalid_argument("first validation week precedes the epoch");
    }
}

}  // namespace tap
