# %% [markdown]
# # Accuracy-ordered reports and time series
#
# `compute_all` always returns the four methods in a fixed order, most
# accurate first. That order is about the methods, not the numbers: for this
# journal the Extended value is smaller than the Improved one.

# %%
from jif import Method, example_journal, render_time_series, render_year_report, time_series, year_report

journal = example_journal()
print(render_year_report(year_report(journal, 2019, precision=3)))
print(render_year_report(year_report(journal, 2015, precision=3)))

# %% [markdown]
# One method over a range of years. Undefined years stay in the series.

# %%
for method in Method.ranked():
    print(render_time_series(time_series(journal, method, 2015, 2019), journal.journal_name))

# %% [markdown]
# Machine-readable output keeps the exact numerator and denominator next to
# the rounded decimal.

# %%
print(render_year_report(year_report(journal, 2019), "json"))
