//! Sample input for the stemming benchmarks.

/// A short news-style paragraph in Serbian Latin script.
pub const PARAGRAPH: &str = "Predsednik je juče u Beogradu razgovarao sa \
predstavnicima opština o novim zakonima. Građani su tražili odgovore na \
pitanja o cenama struje, a ministri su obećali da će se uskoro održati \
nova rasprava. Učitelji i roditelji iz škola u Novom Sadu čitali su \
pismo koje je stiglo iz Niša (kako su rekli novinari).";
