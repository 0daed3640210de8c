// Train / validation / test-week layout of an experiment.
#pragma once

#include <vector>

#include "tap/calendar.hpp"

namespace tap {

/// Rolling weekly evaluation protocol: a fixed training range followed by
/// consecutive 7-day test weeks. The validation week of test week k is the
/// 7 days immediately preceding that week, so selection for week k only ever
/// sees data dated before the week starts.
struct SplitSpec {
    DayRange train;
    std::vector<DayRange> test_weeks;  // consecutive, non-overlapping, 7 days each

    static SplitSpec make(DayRange train, DayIndex test_start, int week_count);

    DayRange validation_week(std::size_t week) const {
        const DayIndex ws = test_weeks.at(week).first;
        return {ws - 7, ws - 1};
    }

    DayIndex test_start() const { return test_weeks.front().first; }
    DayIndex test_end() const { return test_weeks.back().last; }

    /// Last day usable as a training target: the day before the first
    /// validation week begins. Train days past it still serve as historical
    /// input for validation windows.
    DayIndex train_target_end() const {
        const DayIndex cut = validation_week(0).first - 1;
        return cut < train.last ? cut : train.last;
    }

    /// Throws std::invalid_argument if the layout is inconsistent.
    void validate() const;
};

}  // namespace tap
