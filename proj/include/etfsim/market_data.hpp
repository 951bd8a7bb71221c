#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "etfsim/dates.hpp"

namespace etfsim {

/// Ticker symbol, e.g. "BTC". Unique within a dataset.
using AssetId = std::string;

/// One row of the daily panel. Prices, caps and volumes are all in the
/// dataset's quote currency (USDT).
struct DailyObservation {
    Date date;
    double price{0.0};       // > 0 while the asset is listed
    double market_cap{0.0};  // >= 0
    double volume_24h{0.0};  // >= 0
};

/// A single fill of a taker order. Fills sharing taker_order_id belong to
/// one order that was matched against several resting counterparts.
struct TradeFill {
    std::int64_t timestamp_ms{0};
    AssetId asset;
    std::string taker_order_id;
    double price{0.0};     // > 0
    double quantity{0.0};  // > 0
};

/// Relative search-interest series, scores in [0, 100], dates strictly
/// increasing.
class AttentionSeries {
public:
    struct Point {
        Date date;
        double score{0.0};
    };

    void add(Date date, double score);
    const std::vector<Point>& points() const { return points_; }
    bool empty() const { return points_.empty(); }
    Date first_date() const;
    Date last_date() const;

    /// Mean score over points with date in (lo, hi]. Empty window -> nullopt.
    std::optional<double> mean_between(Date lo_exclusive, Date hi_inclusive) const;

private:
    std::vector<Point> points_;
};

/// Default fallback window when an exact-date observation is missing.
inline constexpr int kDefaultStalenessDays = 3;

/// Validated, date-aligned container for everything the engine consumes:
/// per-asset daily observations, the attention series and (optionally)
/// trade fills. Immutable once finalized; safe to share across threads
/// for read-only access.
class MarketDataset {
public:
    // -- construction ------------------------------------------------------
    void add_observation(const AssetId& asset, const DailyObservation& obs);
    void set_attention(AttentionSeries series);
    void add_fill(const TradeFill& fill);

    /// Validates invariants, sorts fills into taker-order groups and builds
    /// the calendar. Must be called once before any query.
    void finalize();

    // -- queries -----------------------------------------------------------
    const std::vector<AssetId>& assets() const { return asset_list_; }
    bool has_asset(const AssetId& asset) const;
    const std::vector<Date>& calendar() const { return calendar_; }
    const AttentionSeries& attention() const { return attention_; }
    const std::vector<TradeFill>& fills() const { return fills_; }

    /// Taker-order groups (every fill belongs to exactly one group),
    /// ordered by first fill occurrence.
    const std::vector<std::vector<TradeFill>>& fill_groups() const { return fill_groups_; }

    const std::map<Date, DailyObservation>& series(const AssetId& asset) const;

    /// Exact-date observation, or the most recent prior one within the
    /// staleness window. Throws if nothing is available in the window.
    /// Never returns data from a later date than requested.
    DailyObservation observation_at(const AssetId& asset, Date date,
                                    int staleness_days = kDefaultStalenessDays) const;

    /// Calendar dates between an asset's first and last observation with no
    /// row for that asset. Such assets are retained; consumers fall back via
    /// observation_at.
    std::vector<Date> gap_dates(const AssetId& asset) const;

private:
    std::map<AssetId, std::map<Date, DailyObservation>> observations_;
    std::vector<AssetId> asset_list_;
    std::vector<Date> calendar_;
    AttentionSeries attention_;
    std::vector<TradeFill> fills_;
    std::vector<std::vector<TradeFill>> fill_groups_;
    bool finalized_{false};
};

/// Loads and validates the CSV inputs (schemas in the README). The trades
/// path may be empty when no fill data is available.
MarketDataset load_dataset(const std::string& prices_csv, const std::string& volumes_csv,
                           const std::string& attention_csv, const std::string& trades_csv = "");

/// Writes a dataset back out in the input schemas. Loading the written
/// files reproduces the dataset exactly.
void write_dataset(const MarketDataset& dataset, const std::string& prices_csv,
                   const std::string& volumes_csv, const std::string& attention_csv,
                   const std::string& trades_csv = "");

}  // namespace etfsim
