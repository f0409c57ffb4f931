// Generated by scripts/gen_seed_data.py -- do not edit by hand.
// Embedded copies of data/mokassar_seed.tsv and data/intervening_seed.txt;
// a unit test keeps the files and these constants byte-identical.
#pragma once

#include <string_view>

namespace parstem::seeds {

inline constexpr std::string_view kMokassarTsv =
    "# Mokassar lexicon: PLURAL<TAB>SINGULAR, one entry per line.\n"
    "آثار\tآثر\n"
    "اسامی\tاسم\n"
    "جزایر\tجزیره\n"
    "حوادث\tحادثه\n"
    "قوانین\tقانون\n";

inline constexpr std::string_view kInterveningText =
    "# Intervening lexicon: one exempt word per line.\n"
    "ستون\n"
    "هدفون\n"
    "تلویزیون\n"
    "عین\n"
    "دین\n"
    "پایین\n"
    "اثبات\n"
    "ادات\n"
    "آبادان\n"
    "آبان\n"
    "خان\n";

}  // namespace parstem::seeds
