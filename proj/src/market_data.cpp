#include "etfsim/market_data.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "etfsim/csv.hpp"
#include "etfsim/errors.hpp"

namespace etfsim {

// ---------------------------------------------------------------------------
// AttentionSeries

void AttentionSeries::add(Date date, double score) {
    if (!points_.empty() && date <= points_.back().date) {
        throw Error("attention dates must be strictly increasing at " + date.to_string());
    }
    if (score < 0.0 || score > 100.0) {
        throw Error("attention score out of [0,100] at " + date.to_string());
    }
    points_.push_back({date, score});
}

Date AttentionSeries::first_date() const {
    if (points_.empty()) {
        throw Error("attention series is empty");
    }
    return points_.front().date;
}

Date AttentionSeries::last_date() const {
    if (points_.empty()) {
        throw Error("attention series is empty");
    }
    return points_.back().date;
}

std::optional<double> AttentionSeries::mean_between(Date lo_exclusive, Date hi_inclusive) const {
    double sum = 0.0;
    int n = 0;
    for (const auto& p : points_) {
        if (p.date > lo_exclusive && p.date <= hi_inclusive) {
            sum += p.score;
            ++n;
        }
    }
    if (n == 0) {
        return std::nullopt;
    }
    return sum / n;
}

// ---------------------------------------------------------------------------
// MarketDataset

void MarketDataset::add_observation(const AssetId& asset, const DailyObservation& obs) {
    if (asset.empty()) {
        throw Error("empty asset id");
    }
    if (!(obs.price > 0.0)) {
        throw Error("non-positive price for " + asset + " at " + obs.date.to_string());
    }
    if (obs.market_cap < 0.0 || obs.volume_24h < 0.0) {
        throw Error("negative market cap or volume for " + asset + " at " + obs.date.to_string());
    }
    auto& per_asset = observations_[asset];
    if (!per_asset.emplace(obs.date, obs).second) {
        throw Error("duplicate observation for " + asset + " at " + obs.date.to_string());
    }
    finalized_ = false;
}

void MarketDataset::set_attention(AttentionSeries series) {
    attention_ = std::move(series);
    finalized_ = false;
}

void MarketDataset::add_fill(const TradeFill& fill) {
    if (fill.asset.empty() || fill.taker_order_id.empty()) {
        throw Error("trade fill with empty asset or taker_order_id");
    }
    if (!(fill.price > 0.0) || !(fill.quantity > 0.0)) {
        throw Error("trade fill with non-positive price or quantity (order " +
                    fill.taker_order_id + ")");
    }
    fills_.push_back(fill);
    finalized_ = false;
}

void MarketDataset::finalize() {
    asset_list_.clear();
    std::set<Date> dates;
    for (const auto& [asset, per_asset] : observations_) {
        asset_list_.push_back(asset);
        for (const auto& [date, obs] : per_asset) {
            dates.insert(date);
        }
    }
    calendar_.assign(dates.begin(), dates.end());

    // Fills must arrive time-ordered; an order's fills may interleave with
    // other orders but never with a different asset.
    for (std::size_t i = 1; i < fills_.size(); ++i) {
        if (fills_[i].timestamp_ms < fills_[i - 1].timestamp_ms) {
            std::ostringstream os;
            os << "trade fills not sorted by timestamp at index " << i << " (order "
               << fills_[i].taker_order_id << ")";
            throw Error(os.str());
        }
    }
    fill_groups_.clear();
    std::map<std::string, std::size_t> group_of;
    for (const auto& fill : fills_) {
        auto [it, inserted] = group_of.emplace(fill.taker_order_id, fill_groups_.size());
        if (inserted) {
            fill_groups_.emplace_back();
        } else if (fill_groups_[it->second].front().asset != fill.asset) {
            throw Error("taker order " + fill.taker_order_id + " spans multiple assets");
        }
        fill_groups_[it->second].push_back(fill);
    }
    finalized_ = true;
}

bool MarketDataset::has_asset(const AssetId& asset) const {
    return observations_.count(asset) > 0;
}

const std::map<Date, DailyObservation>& MarketDataset::series(const AssetId& asset) const {
    const auto it = observations_.find(asset);
    if (it == observations_.end()) {
        throw Error("unknown asset '" + asset + "'");
    }
    return it->second;
}

DailyObservation MarketDataset::observation_at(const AssetId& asset, Date date,
                                               int staleness_days) const {
    const auto& per_asset = series(asset);
    auto it = per_asset.upper_bound(date);
    if (it == per_asset.begin()) {
        throw Error("no observation for " + asset + " at or before " + date.to_string());
    }
    --it;
    if (days_between(it->first, date) > staleness_days) {
        std::ostringstream os;
        os << "no observation for " << asset << " within " << staleness_days << " days before "
           << date.to_string() << " (last seen " << it->first.to_string() << ")";
        throw Error(os.str());
    }
    return it->second;
}

std::vector<Date> MarketDataset::gap_dates(const AssetId& asset) const {
    const auto& per_asset = series(asset);
    std::vector<Date> gaps;
    if (per_asset.empty()) {
        return gaps;
    }
    const Date first = per_asset.begin()->first;
    const Date last = per_asset.rbegin()->first;
    for (const Date& d : calendar_) {
        if (d > first && d < last && per_asset.count(d) == 0) {
            gaps.push_back(d);
        }
    }
    return gaps;
}

// ---------------------------------------------------------------------------
// CSV load / save

namespace {

const std::vector<std::string> kPricesHeader = {"date", "asset", "price", "market_cap"};
const std::vector<std::string> kVolumesHeader = {"date", "asset", "volume_24h"};
const std::vector<std::string> kAttentionHeader = {"date", "score"};
const std::vector<std::string> kTradesHeader = {"timestamp_ms", "asset", "taker_order_id",
                                                "price", "quantity"};

[[noreturn]] void row_error(const csv::Table& t, std::size_t row, const std::string& msg) {
    std::ostringstream os;
    os << t.path << ":" << t.line_numbers[row] << ": " << msg;
    throw Error(os.str());
}

Date parse_date_field(const csv::Table& t, std::size_t row, std::size_t col) {
    try {
        return Date::parse(t.rows[row][col]);
    } catch (const Error& e) {
        row_error(t, row, std::string("column '") + t.header[col] + "': " + e.what());
    }
}

}  // namespace

MarketDataset load_dataset(const std::string& prices_csv, const std::string& volumes_csv,
                           const std::string& attention_csv, const std::string& trades_csv) {
    MarketDataset ds;

    const csv::Table prices = csv::read(prices_csv, kPricesHeader);
    for (std::size_t r = 0; r < prices.rows.size(); ++r) {
        DailyObservation obs;
        obs.date = parse_date_field(prices, r, 0);
        const AssetId asset = prices.rows[r][1];
        obs.price = csv::parse_double(prices, r, 2);
        obs.market_cap = csv::parse_double(prices, r, 3);
        if (asset.empty()) {
            row_error(prices, r, "empty asset");
        }
        if (!(obs.price > 0.0)) {
            row_error(prices, r, "non-positive price for " + asset);
        }
        if (obs.market_cap < 0.0) {
            row_error(prices, r, "negative market_cap for " + asset);
        }
        try {
            ds.add_observation(asset, obs);
        } catch (const Error& e) {
            row_error(prices, r, e.what());
        }
    }

    const csv::Table volumes = csv::read(volumes_csv, kVolumesHeader);
    // Volume rows attach to existing price rows; a volume without a price
    // observation indicates misaligned inputs.
    std::map<AssetId, std::map<Date, double>> vol;
    for (std::size_t r = 0; r < volumes.rows.size(); ++r) {
        const Date date = parse_date_field(volumes, r, 0);
        const AssetId asset = volumes.rows[r][1];
        const double v = csv::parse_double(volumes, r, 2);
        if (v < 0.0) {
            row_error(volumes, r, "negative volume_24h for " + asset);
        }
        if (!ds.has_asset(asset) || ds.series(asset).count(date) == 0) {
            row_error(volumes, r, "volume for " + asset + " at " + date.to_string() +
                                      " has no matching price observation");
        }
        if (!vol[asset].emplace(date, v).second) {
            row_error(volumes, r, "duplicate volume for " + asset + " at " + date.to_string());
        }
    }

    // Rebuild with volumes merged in.
    MarketDataset merged;
    for (const AssetId& asset : ds.assets()) {
        for (const auto& [date, obs] : ds.series(asset)) {
            DailyObservation merged_obs = obs;
            const auto va = vol.find(asset);
            if (va != vol.end()) {
                const auto vd = va->second.find(date);
                if (vd != va->second.end()) {
                    merged_obs.volume_24h = vd->second;
                }
            }
            merged.add_observation(asset, merged_obs);
        }
    }

    const csv::Table attention = csv::read(attention_csv, kAttentionHeader);
    AttentionSeries att;
    for (std::size_t r = 0; r < attention.rows.size(); ++r) {
        const Date date = parse_date_field(attention, r, 0);
        const double score = csv::parse_double(attention, r, 1);
        try {
            att.add(date, score);
        } catch (const Error& e) {
            row_error(attention, r, e.what());
        }
    }
    merged.set_attention(std::move(att));

    if (!trades_csv.empty()) {
        const csv::Table trades = csv::read(trades_csv, kTradesHeader);
        for (std::size_t r = 0; r < trades.rows.size(); ++r) {
            TradeFill fill;
            fill.timestamp_ms = csv::parse_int64(trades, r, 0);
            fill.asset = trades.rows[r][1];
            fill.taker_order_id = trades.rows[r][2];
            fill.price = csv::parse_double(trades, r, 3);
            fill.quantity = csv::parse_double(trades, r, 4);
            try {
                merged.add_fill(fill);
            } catch (const Error& e) {
                row_error(trades, r, e.what());
            }
        }
    }

    merged.finalize();
    return merged;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write '" + path + "'");
    }
    return out;
}

}  // namespace

void write_dataset(const MarketDataset& dataset, const std::string& prices_csv,
                   const std::string& volumes_csv, const std::string& attention_csv,
                   const std::string& trades_csv) {
    auto prices = open_out(prices_csv);
    prices << csv::join_row(kPricesHeader) << "\n";
    auto volumes = open_out(volumes_csv);
    volumes << csv::join_row(kVolumesHeader) << "\n";
    for (const AssetId& asset : dataset.assets()) {
        for (const auto& [date, obs] : dataset.series(asset)) {
            prices << date.to_string() << "," << asset << "," << csv::format_double(obs.price)
                   << "," << csv::format_double(obs.market_cap) << "\n";
            volumes << date.to_string() << "," << asset << ","
                    << csv::format_double(obs.volume_24h) << "\n";
        }
    }

    auto attention = open_out(attention_csv);
    attention << csv::join_row(kAttentionHeader) << "\n";
    for (const auto& p : dataset.attention().points()) {
        attention << p.date.to_string() << "," << csv::format_double(p.score) << "\n";
    }

    if (!trades_csv.empty()) {
        auto trades = open_out(trades_csv);
        trades << csv::join_row(kTradesHeader) << "\n";
        for (const TradeFill& f : dataset.fills()) {
            trades << f.timestamp_ms << "," << f.asset << "," << f.taker_order_id << ","
                   << csv::format_double(f.price) << "," << csv::format_double(f.quantity)
                   << "\n";
        }
    }
}

}  // namespace etfsim
